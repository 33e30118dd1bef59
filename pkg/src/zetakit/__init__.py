"""zetakit: Euler-Kronecker constants, Dedekind zeta zeros and
Brauer-Siegel family statistics for abelian number fields."""

__version__ = "0.1.0"
