"""Buchberger's algorithm for ideals and submodules of S^r, syzygies, quotients."""

from .api import (GradedGenerators, Ideal, ModuleVector, buchberger, check_syzygy,  # noqa: F401
                  ideal_quotient, intersect, is_groebner_basis, minimalize, normal_form,
                  raw_syzygies, saturation, spoly, syzygy_generators)
