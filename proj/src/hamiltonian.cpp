namespace bvlab {}
