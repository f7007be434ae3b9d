"""Sextic Index - field index and prime splitting for x^6 + a*x^5 + b."""

__version__ = "1.0.0"
__author__ = "Rozx"
__email__ = "lisida900710@gmail.com"
