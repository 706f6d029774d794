"""Secrecy outage analysis of two-user untrusted NOMA under imperfect SIC."""

__version__ = "0.1.0"
