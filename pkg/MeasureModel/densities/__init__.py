"""Density family plugins; modules here are auto-discovered by DensityFactory"""
