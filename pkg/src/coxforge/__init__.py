"""Cox rings of bidegree (d, e) hypersurfaces in P^1 x P^n, checked two ways."""

__version__ = "0.1.0"
