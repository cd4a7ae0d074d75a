"""Quasi-static simulation of adhesive interactions between thin fibers
and shells with molecular-force laws condensed onto cross sections."""

__version__ = "0.1.0"
