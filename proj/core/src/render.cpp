namespace sslab {}
