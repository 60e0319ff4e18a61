"""Pythagorean triples, Euclid odd pairs, and their link to transfer-capable couplings."""

import math
from typing import List, Optional, Tuple

from pydantic import ValidationError

from ..errors import InvalidArgumentError, InvalidPairError, NoDynamicsError
from ..schemas.couplings import CouplingSet, HopfCoordinates
from ..schemas.transfer import TransferSolution
from ..schemas.triples import OddPair, PythTriple, TransferMatch
from ..utils.logging import get_logger
from .constants import DEFAULT_CONE_TOLERANCE, DEFAULT_MAX_DENOMINATOR, DEFAULT_TRANSFER_TOLERANCE
from .dynamics import transfer_time
from .hopf import ladder_from_hopf

logger = get_logger("triples")


def make_pair(p: int, q: int) -> OddPair:
    """OddPair(p, q), reporting violations as InvalidPairError."""
    try:
        return OddPair(p=p, q=q)
    except ValidationError as e:
        raise InvalidPairError(_first_message(e)) from e


def _first_message(e: ValidationError) -> str:
    message = e.errors()[0]["msg"]
    return message.removeprefix("Value error, ")


def euclid_triple(pair: OddPair) -> PythTriple:
    """((p^2 - q^2)/2, pq, (p^2 + q^2)/2): even leg, odd leg, hypotenuse."""
    p, q = pair.p, pair.q
    return PythTriple(a=(p * p - q * q) // 2, b=p * q, c=(p * p + q * q) // 2)


def _require_positive(*values: int) -> None:
    if any(v <= 0 for v in values):
        raise InvalidArgumentError(f"triple entries must be positive, got {values}")


def is_pythagorean(a: int, b: int, c: int) -> bool:
    _require_positive(a, b, c)
    return a * a + b * b == c * c


def is_primitive(a: int, b: int, c: int) -> bool:
    return is_pythagorean(a, b, c) and math.gcd(math.gcd(a, b), c) == 1


def pair_from_triple(triple: PythTriple) -> OddPair:
    """Invert the Euclid generator; legs may come in either order."""
    a, b, c = triple.as_tuple()
    if not triple.primitive:
        raise InvalidPairError(f"({a}, {b}, {c}) is not a primitive triple")
    even_leg = a if a % 2 == 0 else b
    p2, q2 = c + even_leg, c - even_leg
    p, q = math.isqrt(p2), math.isqrt(q2)
    if p * p != p2 or q * q != q2:
        raise InvalidPairError(f"({a}, {b}, {c}) is not of the Euclid odd-pair form")
    return make_pair(p, q)


def enumerate_primitive(c_max: int) -> List[PythTriple]:
    """All primitive triples with hypotenuse <= c_max, sorted by (c, smaller leg)."""
    if c_max < 5:
        return []
    triples = []
    p = 3
    while (p * p + 1) // 2 <= c_max:
        for q in range(1, p, 2):
            if (p * p + q * q) // 2 > c_max:
                break
            if math.gcd(p, q) == 1:
                triples.append(euclid_triple(OddPair(p=p, q=q)))
        p += 2
    triples.sort(key=lambda t: (t.c, min(t.a, t.b)))
    logger.debug(f"Enumerated {len(triples)} primitive triples up to c = {c_max}")
    return triples


def couplings_from_pair(
    pair: OddPair, tau: float, tol: float = DEFAULT_CONE_TOLERANCE
) -> Tuple[CouplingSet, TransferSolution]:
    """Ladder couplings that transfer 1 -> 3 completely at exactly tau.

    v12 : v23 : v34 = (p^2 + q^2) : 2pq : (p^2 - q^2), i.e. c : b : a.
    """
    if not (math.isfinite(tau) and tau > 0):
        raise InvalidArgumentError(f"tau must be positive and finite, got {tau}")
    p, q = pair.p, pair.q
    scale = (math.pi / (2.0 * tau)) ** 2
    hopf = HopfCoordinates(
        xi0=scale * (p * p + q * q),
        xi1=scale * 2 * p * q,
        xi2=scale * (p * p - q * q),
        xi3=0.0,
    )
    couplings = ladder_from_hopf(hopf, tol=tol)
    half_turn = math.pi / (2.0 * tau)
    solution = TransferSolution(
        tau=tau, p=p, q=q, omega=math.pi / tau, vL=q * half_turn, vR=p * half_turn
    )
    return couplings, solution


def detect_transfer_condition(
    c: CouplingSet,
    tol: float = DEFAULT_TRANSFER_TOLERANCE,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
) -> Optional[TransferMatch]:
    """Recognise (xi0 : xi1 : xi2) as proportional to a primitive (c : b : a).

    Non-primitive coupling ratios such as 10:6:8 reduce to their primitive
    triple. Equal frequencies (p = q) transfer but match no triple.
    """
    try:
        solution = transfer_time(c, tol=tol, max_denominator=max_denominator)
    except NoDynamicsError:
        return None
    if solution is None:
        return None
    if solution.p == solution.q:
        logger.debug("Equal left and right frequencies: transfer without a Pythagorean triple")
        return None
    pair = OddPair(p=solution.p, q=solution.q)
    return TransferMatch(triple=euclid_triple(pair), pair=pair, solution=solution)
