"""Executable metatheory for small type theories.

``tait.stlc``     simply typed syntax, NbE, rewriting oracle, finite-set model
``tait.mltt``     Pi/Sigma/universe fragment with typed NbE and bidirectional checking
``tait.systemf``  System F with a finite-instance parametricity checker
``tait.frontend`` parser, printer and CLI
"""

__version__ = "0.1.0"
