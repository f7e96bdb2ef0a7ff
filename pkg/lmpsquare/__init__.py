"""
lmpsquare - Semipullbacks of finite labelled Markov processes.

Completes cospans of (sub)probability kernels and of labelled Markov
processes to commutative squares with exact rational arithmetic:
set pullback → common extension of the fiber measures → positive
functional extension → restriction to the pullback. Cospans obtained from
largest zigzag quotients are turned into bisimilarity spans.
"""

__version__ = "0.1.0"
