"""End-to-end construction: component squares to sliced array and design."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import NotOrthogonal, OrderTooSmall, UnknownFixture
from .mols import LatinSquare, are_orthogonal, fixture_catalog, generate_mols
from .product import (
    ProductSquare,
    QuasiSudokuSquare,
    direct_product,
    quasi_sudoku_reorder,
    verify_quasi_sudoku,
)
from .projection import (
    ProjectedOverlay,
    ProjectionSpec,
    superimpose,
    verify_double_orthogonality,
)
from .report import VerificationReport
from .serialize import read
from .sfd import SpaceFillingDesign, build_sfd, verify_design
from .sliced_oa import (
    SlicedOA,
    collapse_slices,
    partition_slices,
    unstack,
    verify_oa_strength,
    verify_sliced_oa,
)

SOURCES = ("generated", "fixture", "files")

_FIXTURE_BY_ORDER = {4: "fig2-order4", 3: "fig2-order3"}


@dataclass
class RunConfig:
    m: int
    n: int
    projection: str = "coordinate"
    source: str = "generated"
    square_files: tuple[Path, ...] = ()
    seed: int | None = None
    output: Path | None = None
    format: str = "json"

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}")
        if self.source != "files":
            for v in (self.m, self.n):
                if v < 3 or v == 6:
                    raise OrderTooSmall(
                        f"order {v} has no available pair of orthogonal Latin squares"
                    )
        if self.format not in ("json", "csv"):
            raise ValueError("format must be 'json' or 'csv'")
        # raises SpecViolation for an invalid modular request
        self.spec

    @property
    def spec(self) -> ProjectionSpec:
        return ProjectionSpec(self.projection, self.m, self.n)


def pair_for_order(order: int, source: str) -> tuple[LatinSquare, LatinSquare]:
    """An orthogonal pair: the first two generated squares, or the printed pair."""
    if source == "fixture":
        if order not in _FIXTURE_BY_ORDER:
            raise UnknownFixture(f"no printed squares of order {order}")
        sqs = fixture_catalog(_FIXTURE_BY_ORDER[order]).squares
        return sqs[0], sqs[-1]
    sqs = generate_mols(order).squares
    return sqs[0], sqs[1]


@dataclass
class Construction:
    spec: ProjectionSpec
    components: tuple[LatinSquare, LatinSquare, LatinSquare, LatinSquare]
    products: tuple[ProductSquare, ProductSquare]
    quasi: tuple[QuasiSudokuSquare, QuasiSudokuSquare]
    overlay: ProjectedOverlay
    sliced: SlicedOA
    reports: dict[str, VerificationReport] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports.values())


def construct(
    spec: ProjectionSpec,
    components: tuple[LatinSquare, LatinSquare, LatinSquare, LatinSquare],
) -> Construction:
    """Run the whole chain from ``(A1, B1, A2, B2)`` and verify each stage.

    ``A1, B1`` have order ``m`` and ``A2, B2`` order ``n``.
    """
    a1, b1, a2, b2 = components
    if not are_orthogonal(a1, b1) or not are_orthogonal(a2, b2):
        raise NotOrthogonal("component squares must form orthogonal pairs")
    pa, pb = direct_product(a1, a2), direct_product(b1, b2)
    qa, qb = quasi_sudoku_reorder(pa), quasi_sudoku_reorder(pb)
    overlay = superimpose(qa, qb, spec)
    oa = unstack([qa, qb])
    sliced = collapse_slices(partition_slices(oa, spec.m, spec.n), spec)
    reports = {
        "products orthogonal": VerificationReport(
            "products orthogonal",
            are_orthogonal(pa.as_latin(), pb.as_latin()),
        ),
        "first quasi-sudoku": verify_quasi_sudoku(qa),
        "second quasi-sudoku": verify_quasi_sudoku(qb),
        "double orthogonality": verify_double_orthogonality(overlay),
        "full array strength": verify_oa_strength(oa, 2),
        "sliced array": verify_sliced_oa(sliced),
    }
    if not reports["products orthogonal"].passed:
        reports["products orthogonal"].failures.append("products are not orthogonal")
    for name, r in reports.items():
        r.check = name
    return Construction(spec, components, (pa, pb), (qa, qb), overlay, sliced, reports)


def construct_from_config(config: RunConfig) -> Construction:
    if config.source == "files":
        if len(config.square_files) != 4:
            raise ValueError("need four square files: A1 B1 A2 B2")
        comps = tuple(read(p, "latin-square") for p in config.square_files)
        if comps[0].order != config.m or comps[2].order != config.n:
            raise ValueError(
                f"square files have orders {comps[0].order}, {comps[2].order}; "
                f"expected m={config.m}, n={config.n}"
            )
    else:
        comps = pair_for_order(config.m, config.source) + pair_for_order(
            config.n, config.source
        )
    return construct(config.spec, comps)


def design_from_config(config: RunConfig) -> tuple[Construction, SpaceFillingDesign, VerificationReport]:
    if config.seed is None:
        raise ValueError("a seed is required")
    c = construct_from_config(config)
    d = build_sfd(c.sliced, config.seed)
    return c, d, verify_design(d)
