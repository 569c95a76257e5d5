"""Test package for monok"""
