"""
Moduli Engine - the object the command line talks to
It fixes a genus and sign convention, owns the worker pool and dispatches
named capabilities to the pairing, Gram and duality modules.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from algebra.classes import CohClass
from algebra.monomials import Monomial, NormalizedMonomial, multiply, normalize
from algebra.parser import parse_monomial
from engine.duality import (CollapseReport, NewsteadReport, dual_partner_with_functional, handle_collapse_check,
                            newstead_check)
from engine.gram import GramMatrix, gram, rank_and_radical
from engine.pairing import PairingConvention, collapse_handle, pair_monomial, table
from geometry.rep_variety import RepVarietyReport, verify_samples
from utils.errors import GenusOutOfRange
from utils.logging_utils import logger


class ModuliEngine:
    def __init__(self, genus: int, convention: PairingConvention = PairingConvention.CONSISTENT,
                 jobs: int = 1):
        if genus < 1:
            raise GenusOutOfRange(f"Genus must be at least 1, got {genus}")
        self.genus = genus
        self.convention = PairingConvention.from_text(convention)
        self.jobs = jobs
        self._executor: Optional[ThreadPoolExecutor] = None

        self.capabilities = {
            'pair': {
                'handler': self.pair,
                'description': 'Evaluate a monomial against [M_g]'
            },
            'table': {
                'handler': self.table,
                'description': 'All admissible f^m a^n gamma^p pairings'
            },
            'gram': {
                'handler': self.gram,
                'description': 'Gram matrix, rank and radical in one degree'
            },
            'dual': {
                'handler': self.dual,
                'description': 'Dual partner and functional of a generator'
            },
            'newstead': {
                'handler': self.newstead,
                'description': 'Check that a^g pairs to zero'
            },
            'collapse': {
                'handler': self.collapse,
                'description': 'Compare gamma_i * x on M_g with x on M_(g-1)'
            },
            'collapse_report': {
                'handler': self.collapse_report,
                'description': 'Run the handle collapse comparison over every handle'
            },
            'verify_rep': {
                'handler': self.verify_rep,
                'description': 'Fiber, regularity and freeness checks on sample points'
            },
        }

        logger.info(f"Moduli engine initialized: genus {genus}, {self.convention.value} signs, {jobs} job(s)")

    def __enter__(self) -> "ModuliEngine":
        if self.jobs > 1:
            self._executor = ThreadPoolExecutor(max_workers=self.jobs)
        return self

    def __exit__(self, *exc_info) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def map(self, fn, items):
        """Order-preserving map, parallel when a pool is open"""
        if self._executor is None:
            return map(fn, items)
        return self._executor.map(fn, items)

    def run(self, capability: str, *args) -> Any:
        """Dispatch a named capability"""
        handler_config = self.capabilities.get(capability)
        if not handler_config:
            raise KeyError(f"No handler for capability: {capability}")
        logger.info(f"Running {capability} on M_{self.genus} with {args}")
        return handler_config['handler'](*args)

    def parse(self, text: str) -> NormalizedMonomial:
        return normalize(parse_monomial(text, self.genus), self.genus)

    def pair(self, text: str) -> Tuple[Monomial, NormalizedMonomial, Fraction]:
        """Parsed product, its normal form and its pairing against [M_g]"""
        raw = parse_monomial(text, self.genus)
        x = normalize(raw, self.genus)
        return raw, x, pair_monomial(x, self.genus, self.convention)

    def table(self) -> List[Tuple[int, int, int, Fraction]]:
        return table(self.genus, self.convention, mapper=self.map)

    def gram(self, degree: int) -> Tuple[GramMatrix, int, List[CohClass]]:
        matrix = gram(self.genus, degree, self.convention, mapper=self.map)
        rank, radical = rank_and_radical(matrix)
        return matrix, rank, radical

    def dual(self, token: str) -> Tuple[CohClass, List[NormalizedMonomial], List[Fraction]]:
        return dual_partner_with_functional(self.genus, token, self.convention, mapper=self.map)

    def newstead(self) -> NewsteadReport:
        return newstead_check(self.genus, self.convention, mapper=self.map)

    def collapse(self, handle: int, text: str) -> Dict[str, Any]:
        x = self.parse(text)
        lowered = collapse_handle(x, handle, self.genus)
        gamma_i = NormalizedMonomial(gamma_set=(handle,))
        upstairs = pair_monomial(multiply(gamma_i, x, self.genus), self.genus, self.convention)
        downstairs = pair_monomial(lowered, self.genus - 1, self.convention)
        return {"monomial": x, "collapsed": lowered, "upstairs": upstairs, "downstairs": downstairs}

    def collapse_report(self) -> CollapseReport:
        return handle_collapse_check(self.genus, self.convention)

    def verify_rep(self, seed: int, samples: int, tol: float) -> RepVarietyReport:
        return verify_samples(self.genus, seed, samples, tol, mapper=self.map)

