"""Exact characters of the simple GL(W)-equivariant D-modules on Veronese
cones, with the plethysm, Bott and Ext computations behind them."""

__version__ = "0.1.0"
