"""foamcat: exact combinatorial webs, foams, evaluation and 2-category machinery."""

__version__ = "0.1.0"
