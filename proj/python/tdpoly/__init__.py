"""Exact total domination polynomials: enumeration, closed forms, roots, checks."""

try:
    from ._tdpoly import *  # noqa: F401,F403  (installed wheel layout)
    from ._tdpoly import __version__  # noqa: F401
except ImportError:  # in-tree build: the extension sits on sys.path directly
    from _tdpoly import *  # noqa: F401,F403
    from _tdpoly import __version__  # noqa: F401
