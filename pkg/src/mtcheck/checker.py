"""Verdict engine: route an abelian-variety descriptor through the theorem
catalog and report the strongest applicable conclusion.

Endomorphism routing: "Q" means type I with endomorphism algebra exactly Q;
"IV-imag-quad" means the algebra is an imaginary quadratic field k (degree
2, with a signature (m_sigma, m_rho) summing to g); "IV-other" is any other
type IV.  The dimension/rank bookkeeping differs per route: the imaginary
quadratic case works with modules of dimension g and half the toric rank,
the rational case with dimension 2g and the full toric rank.

Rules fire independently; the verdict keeps the citation tags of every
fired rule in order and reports the strongest conclusion
(MT_and_divisorial > MT > MT_or_HodgeDivisorial > ExceptionPairHit >
NotCovered).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .divisibility import is_exception_pair
from .exclusion import surviving_inners
from .roots import FormClass


class EndoType(Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"
    IV_IMAG_QUAD = "IV-imag-quad"
    IV_OTHER = "IV-other"
    RATIONAL = "Q"


class Reduction(Enum):
    GOOD_OR_UNKNOWN = "good-or-unknown"
    BAD_SEMISTABLE_SPLIT = "bad-semistable-split"


class Conclusion(Enum):
    MT_AND_DIVISORIAL = "MT_and_divisorial"
    MT = "MT"
    MT_OR_HODGE_DIVISORIAL = "MT_or_HodgeDivisorial"
    EXCEPTION_PAIR_HIT = "ExceptionPairHit"
    NOT_COVERED = "NotCovered"
    INPUT_INCONSISTENT = "InputInconsistent"


_STRENGTH = {
    Conclusion.MT_AND_DIVISORIAL: 4,
    Conclusion.MT: 3,
    Conclusion.MT_OR_HODGE_DIVISORIAL: 2,
    Conclusion.EXCEPTION_PAIR_HIT: 1,
    Conclusion.NOT_COVERED: 0,
}


class InputInconsistentError(ValueError):
    """Descriptor data contradicts itself; names the violated constraint."""


@dataclass(frozen=True)
class AVDescriptor:
    """What is known about one abelian variety over a number field."""

    g: int
    endo_type: EndoType
    endo_degree: int = 1
    signature: tuple[int, int] | None = None
    toric_rank: int = 0
    reduction: Reduction = Reduction.GOOD_OR_UNKNOWN
    simple: bool = False
    lie_parts_simple: bool = False

    @property
    def bad(self) -> bool:
        return self.reduction is Reduction.BAD_SEMISTABLE_SPLIT


@dataclass(frozen=True)
class Verdict:
    conclusion: Conclusion
    citations: tuple[str, ...]
    notes: tuple[str, ...]


def validate(d: AVDescriptor) -> None:
    """Raise InputInconsistentError on any self-contradictory descriptor."""
    if d.g < 1:
        raise InputInconsistentError("g must be >= 1")
    if d.endo_degree < 1:
        raise InputInconsistentError("endomorphism degree must be >= 1")
    if d.endo_type is EndoType.RATIONAL and d.endo_degree != 1:
        raise InputInconsistentError("endo type Q forces degree 1")
    if d.endo_type is EndoType.IV_IMAG_QUAD and d.endo_degree != 2:
        raise InputInconsistentError("an imaginary quadratic field has degree 2")
    if d.endo_type is EndoType.IV_IMAG_QUAD and d.signature is None:
        raise InputInconsistentError("imaginary quadratic descriptors need a signature")
    if d.signature is not None:
        a, b = d.signature
        if a < 0 or b < 0:
            raise InputInconsistentError("signature entries must be >= 0")
        if a + b != d.g:
            raise InputInconsistentError(
                f"signature {d.signature} must sum to g = {d.g}")
    if d.toric_rank < 0 or d.toric_rank > d.g:
        raise InputInconsistentError("toric rank must lie in 0..g")
    if d.bad and d.toric_rank == 0:
        raise InputInconsistentError("bad semistable reduction forces toric rank >= 1")
    if not d.bad and d.toric_rank != 0:
        raise InputInconsistentError("toric rank is only meaningful for bad reduction")
    if d.bad and d.simple and d.toric_rank % d.endo_degree != 0:
        raise InputInconsistentError(
            f"endomorphism degree {d.endo_degree} must divide toric rank "
            f"{d.toric_rank} for a simple variety")


_RULE_DESCRIPTIONS = {
    "Thm 1.2": "imaginary quadratic multiplication with coprime signature: "
               "all Hodge and Tate classes are divisorial",
    "Thm 2.4": "fourfold with extra endomorphisms",
    "Thm 5.1": "bad semistable reduction of minimal toric rank",
    "Thm 5.2": "fourfold, endomorphisms Q, bad but not purely multiplicative reduction",
    "Thm 6.4": "imaginary quadratic case with toric rank 2r, gcd(r, g) = 1",
    "Thm 6.5": "endomorphisms Q, toric rank prime to 2g",
    "Thm 6.6": "endomorphisms Q, simple, bad reduction of toric rank 2",
    "Thm 7.1": "simple Lie parts: MT group or Hodge classes divisorial",
}


def _exclusion_note(tag: str, n: int, form: FormClass, r: int) -> str:
    if n <= 4:
        return (f"{tag}: ambient dimension {n} <= 4 handled by the "
                "small-dimension results; exclusion engine not consulted")
    survivors = surviving_inners(n, form, r)
    if not survivors:
        return f"{tag}: survivors: none (dim {n}, {form.value}, rank {r})"
    names = ", ".join(s.label for s in survivors)
    return f"{tag}: surviving proper inclusions: {names} (dim {n}, {form.value}, rank {r})"


def _evaluate_rules(d: AVDescriptor):
    """Yields (rule_id, tag, fired, conclusion, note, why_not)."""
    results = []

    def add(rule_id, tag, fired, conclusion=None, note=None, why_not=None):
        results.append((rule_id, tag, fired, conclusion, note, why_not))

    # R1: imaginary quadratic multiplication, coprime signature
    if d.endo_type is not EndoType.IV_IMAG_QUAD:
        add("R1", "Thm 1.2", False, why_not="endo type is not an imaginary quadratic field")
    elif d.signature is None or gcd(*d.signature) != 1:
        add("R1", "Thm 1.2", False, why_not="signature entries are not coprime")
    else:
        add("R1", "Thm 1.2", True, Conclusion.MT_AND_DIVISORIAL)

    # R2: fourfold with extra endomorphisms
    if d.g == 4 and d.simple and d.endo_type is not EndoType.RATIONAL:
        add("R2", "Thm 2.4", True, Conclusion.MT)
    else:
        add("R2", "Thm 2.4", False,
            why_not="needs g = 4, simple, and endomorphisms beyond Q")

    # R3: minimal toric rank
    if d.bad and d.simple and d.endo_type is EndoType.RATIONAL and d.toric_rank == 1:
        add("R3", "Thm 5.1", True, Conclusion.MT_AND_DIVISORIAL)
    elif d.bad and d.simple and d.endo_type is EndoType.IV_IMAG_QUAD and d.toric_rank == 2:
        add("R3", "Thm 5.1", True, Conclusion.MT)
    else:
        add("R3", "Thm 5.1", False,
            why_not="needs bad reduction at the minimal toric rank (1 over Q, "
                    "2 over an imaginary quadratic field) and simplicity")

    # R4: fourfold, Q, bad not purely multiplicative
    if (d.g == 4 and d.simple and d.endo_type is EndoType.RATIONAL and d.bad
            and d.toric_rank in (1, 2, 3)):
        add("R4", "Thm 5.2", True, Conclusion.MT_AND_DIVISORIAL)
    else:
        add("R4", "Thm 5.2", False,
            why_not="needs g = 4, simple, endomorphisms Q, bad reduction of "
                    "toric rank 1, 2 or 3")

    # R5: imaginary quadratic, even toric rank 2r with gcd(r, g) = 1
    if (d.endo_type is EndoType.IV_IMAG_QUAD and d.bad
            and d.toric_rank % 2 == 0 and d.toric_rank >= 2
            and gcd(d.toric_rank // 2, d.g) == 1):
        r_half = d.toric_rank // 2
        if is_exception_pair(d.g, r_half):
            add("R5", "Thm 6.4", True, Conclusion.EXCEPTION_PAIR_HIT,
                note=_exclusion_note("Thm 6.4", d.g, FormClass.NON_SELF_DUAL, r_half))
        else:
            add("R5", "Thm 6.4", True, Conclusion.MT,
                note=_exclusion_note("Thm 6.4", d.g, FormClass.NON_SELF_DUAL, r_half))
    else:
        add("R5", "Thm 6.4", False,
            why_not="needs imaginary quadratic multiplication, bad reduction, "
                    "toric rank 2r with gcd(r, g) = 1")

    # R6: Q, toric rank prime to 2g
    if d.endo_type is EndoType.RATIONAL and d.bad and gcd(d.toric_rank, 2 * d.g) == 1:
        add("R6", "Thm 6.5", True, Conclusion.MT,
            note=_exclusion_note("Thm 6.5", 2 * d.g, FormClass.SYMPLECTIC, d.toric_rank))
    else:
        add("R6", "Thm 6.5", False,
            why_not="needs endomorphisms Q, bad reduction, toric rank prime to 2g")

    # R7: Q, simple, toric rank exactly 2
    if d.endo_type is EndoType.RATIONAL and d.simple and d.bad and d.toric_rank == 2:
        add("R7", "Thm 6.6", True, Conclusion.MT)
    else:
        add("R7", "Thm 6.6", False,
            why_not="needs endomorphisms Q, simple, bad reduction of toric rank 2")

    # R8: disjunction for simple Lie parts (fires only if nothing stronger did)
    non_weil = (d.endo_type is EndoType.IV_IMAG_QUAD and d.signature is not None
                and d.signature[0] != d.signature[1])
    type_ok = d.endo_type in (EndoType.TYPE_I, EndoType.TYPE_II, EndoType.RATIONAL) or non_weil
    gcd_route = d.bad and (
        (d.endo_type is EndoType.RATIONAL and gcd(d.toric_rank, 2 * d.g) == 1)
        or (d.endo_type is EndoType.IV_IMAG_QUAD and d.toric_rank % 2 == 0
            and d.toric_rank >= 2 and gcd(d.toric_rank // 2, d.g) == 1)
    )
    strongest_so_far = max(
        (_STRENGTH[c] for (_, _, fired, c, _, _) in results if fired),
        default=-1,
    )
    if not (d.simple and type_ok):
        add("R8", "Thm 7.1", False,
            why_not="needs simplicity and type I, II, Q, or imaginary quadratic "
                    "with unbalanced signature")
    elif not (d.lie_parts_simple or gcd_route):
        add("R8", "Thm 7.1", False,
            why_not="simplicity of the Lie parts is not inferable (no coprime "
                    "toric rank and no explicit flag)")
    elif strongest_so_far >= _STRENGTH[Conclusion.MT_OR_HODGE_DIVISORIAL]:
        add("R8", "Thm 7.1", False,
            why_not="a stronger conclusion already fired")
    else:
        add("R8", "Thm 7.1", True, Conclusion.MT_OR_HODGE_DIVISORIAL)

    return results


def decide(d: AVDescriptor) -> Verdict:
    """Validate, evaluate every rule, and return the strongest conclusion."""
    validate(d)
    results = _evaluate_rules(d)
    fired = [(rid, tag, c, note) for (rid, tag, f, c, note, _) in results if f]
    notes: list[str] = []
    if fired:
        conclusion = max((c for (_, _, c, _) in fired), key=_STRENGTH.get)
        citations = tuple(tag for (_, tag, _, _) in fired)
        notes.extend(note for (_, _, _, note) in fired if note)
    else:
        conclusion = Conclusion.NOT_COVERED
        citations = ()
        notes.extend(
            f"{rid} ({tag}) did not fire: {why}"
            for (rid, tag, f, _, _, why) in results if not f
        )
    if (d.endo_type is EndoType.IV_IMAG_QUAD and d.signature is not None
            and 0 in d.signature and d.g >= 2):
        notes.append("signature has a zero entry: CM type, settled classically "
                     "outside this rule set")
    return Verdict(conclusion, citations, tuple(notes))


def explain(v: Verdict) -> str:
    """Human-readable report for a verdict."""
    lines = [f"conclusion: {v.conclusion.value}"]
    if v.citations:
        lines.append("fired rules:")
        for tag in v.citations:
            lines.append(f"  {tag}: {_RULE_DESCRIPTIONS[tag]}")
    else:
        lines.append("fired rules: none")
    if v.notes:
        lines.append("notes:")
        for note in v.notes:
            lines.append(f"  {note}")
    return "\n".join(lines)
