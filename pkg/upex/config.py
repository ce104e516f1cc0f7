"""
Configuration Classes for upex engines

Provides small, validated configuration objects for the oracle, the
transforms, the dynamic programs, the generators and the SVG renderer.
"""

import os
from dataclasses import dataclass
from typing import Optional

ORACLE_CAP_ENV = "UPEX_ORACLE_CAP"


@dataclass
class OracleConfig:
    """
    Configuration for the brute-force certificate oracle.

    Args:
        max_vertices: Largest |V(G)| the oracle accepts
        materialize: Build and verify a drawing on YES answers

    Example:
        >>> config = OracleConfig(max_vertices=6)
        >>> decision = brute_force_decide(inst, config=config)
    """
    max_vertices: int = 7
    materialize: bool = True

    def __post_init__(self):
        """Validate configuration"""
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")

    @classmethod
    def from_env(cls, materialize: bool = True) -> "OracleConfig":
        """Build a config honouring the UPEX_ORACLE_CAP environment variable"""
        raw = os.environ.get(ORACLE_CAP_ENV)
        if raw is None or raw.strip() == "":
            return cls(materialize=materialize)
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None
        return cls(max_vertices=cap, materialize=materialize)


@dataclass
class TransformConfig:
    """
    Configuration for the instance transforms.

    Args:
        fast_sweep: Maintain the per-line orders by binary search (True) or
            recompute and sort every line from scratch (False)
        check_postconditions: Assert the structural output properties

    Example:
        >>> config = TransformConfig(fast_sweep=False)
        >>> out, emap = eliminate_partial_edges(inst, config=config)
    """
    fast_sweep: bool = True
    check_postconditions: bool = True


@dataclass
class DpConfig:
    """
    Configuration for the path/cycle dynamic programs.

    Args:
        max_n: Largest path length the four-index table is built for
        keep_witness: Attach the decomposition behind a YES answer

    Example:
        >>> config = DpConfig(max_n=64)
        >>> decision = solve_path_fue(inst, config=config)
    """
    max_n: int = 256
    keep_witness: bool = True

    def __post_init__(self):
        """Validate configuration"""
        if self.max_n < 2:
            raise ValueError("max_n must be at least 2")


@dataclass
class StConfig:
    """
    Configuration for the st-graph engines.

    Args:
        check_embedding: Verify that the given embedding is a planar
            rotation system with source and sink on the outer face

    Example:
        >>> decision = solve_st_fue(inst, config=StConfig(check_embedding=False))
    """
    check_embedding: bool = True


@dataclass
class GeneratorConfig:
    """
    Configuration for random instance generation.

    Args:
        kind: ``st``, ``path`` or ``cycle``
        n: Number of vertices
        seed: Random seed; equal seeds give byte-identical instances
        pin_fraction: Probability that a vertex is pinned
        embedded: Attach the upward embedding of the generated drawing
        adversarial: Perturb the pins (decision status unknown)
        chord_rate: Share of st growth steps that add a face chord

    Example:
        >>> config = GeneratorConfig(kind="st", n=30, seed=7)
        >>> inst = generate_instance(config)
    """
    kind: str = "st"
    n: int = 10
    seed: int = 0
    pin_fraction: float = 1.0
    embedded: bool = True
    adversarial: bool = False
    chord_rate: float = 0.3

    def __post_init__(self):
        """Validate configuration"""
        if self.kind not in ("st", "path", "cycle"):
            raise ValueError("kind must be one of st, path, cycle")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.kind == "cycle" and self.n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if not 0.0 <= self.pin_fraction <= 1.0:
            raise ValueError("pin_fraction must be between 0.0 and 1.0")
        if not 0.0 <= self.chord_rate < 1.0:
            raise ValueError("chord_rate must be in [0.0, 1.0)")


@dataclass
class DrawConfig:
    """
    Configuration for SVG export.

    Args:
        viewport: Side of the square viewport in SVG user units
        radius: Vertex circle radius
        margin: Padding kept free around the drawing
        title: Optional document title

    Example:
        >>> svg = render_svg(inst, drawing, DrawConfig(viewport=500))
    """
    viewport: int = 1000
    radius: int = 6
    margin: int = 40
    title: Optional[str] = None

    def __post_init__(self):
        """Validate configuration"""
        if self.viewport <= 0:
            raise ValueError("viewport must be positive")
        if self.margin < 0 or 2 * self.margin >= self.viewport:
            raise ValueError("margin must be non-negative and leave room for the drawing")
        if self.radius <= 0:
            raise ValueError("radius must be positive")
