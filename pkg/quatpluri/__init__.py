"""
quatpluri - Quaternionic linear algebra for pluripotential theory

The tau embedding, Moore determinants and mixed discriminants, real 2-forms
under the rho(j) structure, and the Baston / quaternionic Monge-Ampere
operators, with verification suites for the identities that tie them together.
"""

__version__ = "0.1.0"
