"""Bilateral team-semantics toolkit.

Thin re-export of the compiled extension; formulas and teams travel as
strings in the CLI's concrete syntax (``"(p & NE)"``, ``"{10,01}"``).
"""

try:
    # Installed wheel: the extension lives inside the package.
    from ._teamlogic import (
        BoundsError,
        FormulaParseError,
        ProfileViolation,
        RefusalError,
        antisupports,
        burgess,
        classify,
        closure,
        denote,
        equivalent,
        etnorm,
        flatten,
        ground,
        nnf,
        normalize,
        random_formula,
        supports,
    )
except ImportError:
    # Development tree: the extension sits on PYTHONPATH (the CMake
    # build directory).
    from _teamlogic import (  # type: ignore[no-redef]
        BoundsError,
        FormulaParseError,
        ProfileViolation,
        RefusalError,
        antisupports,
        burgess,
        classify,
        closure,
        denote,
        equivalent,
        etnorm,
        flatten,
        ground,
        nnf,
        normalize,
        random_formula,
        supports,
    )

__all__ = [
    "BoundsError",
    "FormulaParseError",
    "ProfileViolation",
    "RefusalError",
    "antisupports",
    "burgess",
    "classify",
    "closure",
    "denote",
    "equivalent",
    "etnorm",
    "flatten",
    "ground",
    "nnf",
    "normalize",
    "random_formula",
    "supports",
]
