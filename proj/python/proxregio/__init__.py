"""Region-based proximity toolkit: polygonal regions, proximity relations,
descriptive probes, simplicial sewing, parallelism and antipodal search."""

try:
    from ._proxregio import (  # installed package layout
        ProxregioError,
        Scene,
        axiom_schema,
        check_axioms,
        roll_cylinder,
        run_command,
    )
except ImportError:  # development layout: extension module beside the package
    from _proxregio import (
        ProxregioError,
        Scene,
        axiom_schema,
        check_axioms,
        roll_cylinder,
        run_command,
    )

__all__ = [
    "ProxregioError",
    "Scene",
    "axiom_schema",
    "check_axioms",
    "roll_cylinder",
    "run_command",
]
