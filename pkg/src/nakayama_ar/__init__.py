"""Auslander-Reiten theory for derived categories of linear Nakayama algebras."""

__version__ = "0.1.0"
__author__ = "nakayama_ar team"
__description__ = "Exact AR triangles, tau-orbits and AR components of D^b(kA_n/I)"
