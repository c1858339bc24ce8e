"""Closed-form classifier vs Sturm count vs oracle, on one polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .cubic import CubicReport, classify_cubic
from .oracle import Config, RootStructure, oracle_classify, structure_config
from .poly import Poly
from .quartic import QuarticReport, classify_quartic
from .sturm import count_distinct_real_roots


def classify(f: Poly) -> Union[CubicReport, QuarticReport]:
    """Dispatch on degree; f need not be monic."""
    if f.degree == 3:
        return classify_cubic(f)
    if f.degree == 4:
        return classify_quartic(f)
    raise ValueError(f"only cubics and quartics are classified, got degree {f.degree}")


@dataclass(frozen=True)
class CrossCheck:
    config: Config
    sturm_real_count: int
    oracle: RootStructure
    oracle_config: Optional[Config]
    expected: Optional[Config] = None

    @property
    def sturm_agrees(self) -> bool:
        return self.sturm_real_count == self.config.distinct_real_roots

    @property
    def oracle_agrees(self) -> bool:
        return self.oracle_config is self.config

    @property
    def expected_agrees(self) -> bool:
        return self.expected is None or self.expected is self.config

    @property
    def ok(self) -> bool:
        return self.sturm_agrees and self.oracle_agrees and self.expected_agrees


def three_way(f: Poly, expected: Optional[Config] = None) -> CrossCheck:
    report = classify(f)
    rs = oracle_classify(f)
    try:
        oc = structure_config(rs)
    except ValueError:
        oc = None
    return CrossCheck(
        config=report.config,
        sturm_real_count=count_distinct_real_roots(f),
        oracle=rs,
        oracle_config=oc,
        expected=expected,
    )
