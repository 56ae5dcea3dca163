"""Command modules for ProdLab CLI."""
