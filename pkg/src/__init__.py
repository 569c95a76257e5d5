"""monok - Monochromatic k-Connection Toolkit, source package"""
