"""Built-in example models with frozen expected verdicts.

The regression corpus: two circle products where every Lefschetz check
passes (Heisenberg-3 and Heisenberg-5 bases), two five-dimensional
nilpotent contact models failing the Lefschetz property (one of them with
even odd-degree Betti numbers, so only the Lefschetz obstruction fires on
its circle product), their circle products, and negative entries
exercising each reachable validator error.

Every expected value records how it was obtained: "definition" for direct
consequences of the defining data, "hand computation" for worked rank
computations, "dense oracle" for values frozen from the independent dense
routine in the test suite.  Each entry stores a fingerprint of its
expectation map so accidental edits are caught by the suite.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Mapping

from .errors import (NonUniqueLeeFieldError, NonUniqueReebError,
                     NotClosedError, NotVolumeError, RankDefectError,
                     ValidationError)
from .exterior import Form
from .model import StructureModel
from . import lefschetz as _lef
from .structures import (validate_contact, validate_lcs,
                         vaisman_candidate_report)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    model: StructureModel
    omega: Form | None
    eta: Form | None
    nilpotent: bool
    unimodular: bool
    expected: Mapping[str, dict]
    fingerprint: str

    @property
    def kind(self) -> str:
        if self.omega is not None:
            return "lcs"
        if self.eta is not None:
            return "contact"
        return "model"


def entry_fingerprint(expected: Mapping[str, dict]) -> str:
    payload = json.dumps(expected, sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _e(value, source):
    return {"value": value, "source": source}


def _entry(name, structure, omega_idx, eta_idx, expected,
           fingerprint, nilpotent=True, unimodular=True):
    model = StructureModel.from_salamon(structure, name=name)
    n = model.n_gen
    omega = Form.generator(n, omega_idx) if omega_idx else None
    eta = Form.generator(n, eta_idx) if eta_idx else None
    return CatalogEntry(name, model, omega, eta, nilpotent, unimodular,
                        expected, fingerprint)


def builtin_entries() -> tuple[CatalogEntry, ...]:
    """The shipped regression corpus."""
    entries = []

    entries.append(_entry(
        "h3", "(0,0,12)", None, 3,
        {
            "validates": _e("contact", "definition"),
            "reeb_field": _e("E3", "hand computation"),
            "betti": _e([1, 2, 2, 1], "hand computation"),
            "lefschetz_contact": _e([True, True], "hand computation"),
        },
        fingerprint="f2677cfc3f7163b8"))

    entries.append(_entry(
        "h5", "(0,0,0,0,12+34)", None, 5,
        {
            "validates": _e("contact", "definition"),
            "reeb_field": _e("E5", "hand computation"),
            "betti": _e([1, 4, 5, 5, 4, 1], "hand computation"),
            "lefschetz_contact": _e([True, True, True], "dense oracle"),
        },
        fingerprint="30ea7bc194a6a3ce"))

    entries.append(_entry(
        "nil5a", "(0,0,0,12,13+24)", None, 5,
        {
            "validates": _e("contact", "definition"),
            "reeb_field": _e("E5", "hand computation"),
            "betti": _e([1, 3, 4, 4, 3, 1], "hand computation"),
            "lefschetz_contact": _e([True, False, False], "dense oracle"),
        },
        fingerprint="a9e5978929d14ade"))

    entries.append(_entry(
        "nil5b", "(0,0,12,13,14+23)", None, 5,
        {
            "validates": _e("contact", "definition"),
            "reeb_field": _e("E5", "hand computation"),
            "betti": _e([1, 2, 3, 3, 2, 1], "hand computation"),
            "lefschetz_contact": _e([True, False, False], "dense oracle"),
        },
        fingerprint="be944983c30b2c1e"))

    entries.append(_entry(
        "kt4", "(0,0,12,0)", 4, 3,
        {
            "validates": _e("lcs", "definition"),
            "lee_field": _e("E4", "hand computation"),
            "anti_lee_field": _e("E3", "hand computation"),
            "betti": _e([1, 3, 4, 3, 1], "hand computation"),
            "basic_betti": _e([1, 2, 2, 1, 0], "hand computation"),
            "lefschetz_de_rham": _e([True, True], "hand computation"),
            "lefschetz_basic": _e([True, True], "hand computation"),
            "lefschetz_contact": _e([True, True], "hand computation"),
            "equivalence_agree": _e(True, "hand computation"),
            "parity_ok": _e(True, "hand computation"),
            "b_equals_c_sum": _e(True, "hand computation"),
            "uv_invertible": _e([True, True], "hand computation"),
            "gysin_ok": _e(True, "dense oracle"),
            "t_inverse_ok": _e(True, "hand computation"),
            "psi_ok": _e(True, "hand computation"),
            "vaisman": _e("no obstruction found", "hand computation"),
        },
        fingerprint="ecccb9f6e11d46bf"))

    entries.append(_entry(
        "h5s1", "(0,0,0,0,12+34,0)", 6, 5,
        {
            "validates": _e("lcs", "definition"),
            "lee_field": _e("E6", "hand computation"),
            "anti_lee_field": _e("E5", "hand computation"),
            "betti": _e([1, 5, 9, 10, 9, 5, 1], "hand computation"),
            "basic_betti": _e([1, 4, 5, 5, 4, 1, 0], "hand computation"),
            "lefschetz_de_rham": _e([True, True, True], "dense oracle"),
            "lefschetz_basic": _e([True, True, True], "dense oracle"),
            "lefschetz_contact": _e([True, True, True], "dense oracle"),
            "equivalence_agree": _e(True, "dense oracle"),
            "parity_ok": _e(True, "hand computation"),
            "b_equals_c_sum": _e(True, "hand computation"),
            "uv_invertible": _e([True, True, True], "hand computation"),
            "gysin_ok": _e(True, "dense oracle"),
            "t_inverse_ok": _e(True, "dense oracle"),
            "psi_ok": _e(True, "dense oracle"),
            "vaisman": _e("no obstruction found", "dense oracle"),
        },
        fingerprint="ee80af154339998d"))

    entries.append(_entry(
        "nil5a_s1", "(0,0,0,12,13+24,0)", 6, 5,
        {
            "validates": _e("lcs", "definition"),
            "lee_field": _e("E6", "hand computation"),
            "anti_lee_field": _e("E5", "hand computation"),
            "betti": _e([1, 4, 7, 8, 7, 4, 1], "hand computation"),
            "basic_betti": _e([1, 3, 4, 4, 3, 1, 0], "hand computation"),
            "lefschetz_de_rham": _e([True, False, False], "dense oracle"),
            "lefschetz_basic": _e([True, False, False], "dense oracle"),
            "lefschetz_contact": _e([True, False, False], "dense oracle"),
            "equivalence_agree": _e(True, "dense oracle"),
            "parity_ok": _e(False, "hand computation"),
            "b_equals_c_sum": _e(True, "hand computation"),
            "uv_invertible": _e([True, False, True], "hand computation"),
            "gysin_ok": _e(True, "dense oracle"),
            "vaisman": _e("obstruction found", "dense oracle"),
        },
        fingerprint="f02022fd3d055086"))

    entries.append(_entry(
        "nil5b_s1", "(0,0,12,13,14+23,0)", 6, 5,
        {
            "validates": _e("lcs", "definition"),
            "lee_field": _e("E6", "hand computation"),
            "anti_lee_field": _e("E5", "hand computation"),
            "betti": _e([1, 3, 5, 6, 5, 3, 1], "hand computation"),
            "basic_betti": _e([1, 2, 3, 3, 2, 1, 0], "hand computation"),
            "lefschetz_de_rham": _e([True, False, False], "dense oracle"),
            "lefschetz_basic": _e([True, False, False], "dense oracle"),
            "lefschetz_contact": _e([True, False, False], "dense oracle"),
            "equivalence_agree": _e(True, "dense oracle"),
            "parity_ok": _e(True, "hand computation"),
            "b_equals_c_sum": _e(True, "hand computation"),
            "uv_invertible": _e([True, False, True], "hand computation"),
            "gysin_ok": _e(True, "dense oracle"),
            "vaisman": _e("obstruction found", "dense oracle"),
        },
        fingerprint="684cbb5fb386d3bf"))

    entries.append(_entry(
        "abelian4", "(0,0,0,0)", 4, 3,
        {"validates": _e("RankDefect", "definition")},
        fingerprint="726c3a0fc8107f6b"))

    entries.append(_entry(
        "kt4_lee_not_closed", "(0,0,12,0)", 3, 4,
        {"validates": _e("NotClosed", "definition")},
        fingerprint="41fb500b3f8d9f60"))

    entries.append(_entry(
        "h3_not_contact", "(0,0,12)", None, 1,
        {"validates": _e("NotVolume", "definition")},
        fingerprint="a64c41e2c6664412"))

    entries.append(_entry(
        "rank_defect_6d", "(0,0,12,0,0,0)", 4, 3,
        {"validates": _e("RankDefect", "hand computation")},
        fingerprint="a55a40cd567ebdce"))

    return tuple(entries)


_ERROR_NAMES = (
    (NotClosedError, "NotClosed"),
    (RankDefectError, "RankDefect"),
    (NotVolumeError, "NotVolume"),
    (NonUniqueLeeFieldError, "NonUniqueLeeField"),
    (NonUniqueReebError, "NonUniqueReeb"),
)


def run_entry(entry: CatalogEntry) -> dict:
    """Compute the actual value of every check the entry expects."""
    actual: dict = {}
    struct = None
    contact = None
    try:
        if entry.kind == "lcs":
            struct = validate_lcs(entry.model, entry.omega, entry.eta)
            actual["validates"] = "lcs"
        elif entry.kind == "contact":
            contact = validate_contact(entry.model, entry.eta)
            actual["validates"] = "contact"
        else:
            actual["validates"] = "model"
    except ValidationError as exc:
        name = type(exc).__name__
        for cls, short in _ERROR_NAMES:
            if isinstance(exc, cls):
                name = short
                break
        actual["validates"] = name
        return actual

    expected = entry.expected
    model = entry.model
    if "betti" in expected:
        actual["betti"] = list(_lef.betti_numbers(_lef._full(model)))
    if struct is not None:
        n = struct.n
        if "lee_field" in expected:
            actual["lee_field"] = str(struct.U)
        if "anti_lee_field" in expected:
            actual["anti_lee_field"] = str(struct.V)
        if "basic_betti" in expected:
            actual["basic_betti"] = list(
                _lef.betti_numbers(_lef._basic(model, (struct.U,))))
        equivalence = None
        if {"lefschetz_de_rham", "lefschetz_basic", "lefschetz_contact",
                "equivalence_agree"} & set(expected):
            equivalence = _lef.lefschetz_equivalence_report(struct)
        if "lefschetz_de_rham" in expected:
            actual["lefschetz_de_rham"] = [v.de_rham
                                           for v in equivalence.per_degree]
        if "lefschetz_basic" in expected:
            actual["lefschetz_basic"] = [v.basic
                                         for v in equivalence.per_degree]
        if "lefschetz_contact" in expected:
            actual["lefschetz_contact"] = [v.contact
                                           for v in equivalence.per_degree]
        if "equivalence_agree" in expected:
            actual["equivalence_agree"] = equivalence.agree
        if {"parity_ok", "b_equals_c_sum"} & set(expected):
            parity = _lef.betti_parity_check(struct)
            if "parity_ok" in expected:
                actual["parity_ok"] = parity.parity_ok
            if "b_equals_c_sum" in expected:
                actual["b_equals_c_sum"] = parity.sum_identity_ok
        if "uv_invertible" in expected:
            actual["uv_invertible"] = [
                _lef.uv_basic_lefschetz(struct, k).invertible
                for k in range(n + 1)]
        if "gysin_ok" in expected:
            actual["gysin_ok"] = _lef.gysin_sequence_check(struct).ok
        if "t_inverse_ok" in expected:
            ok = True
            try:
                for k in range(n + 1):
                    _lef.t_map(struct, k)
            except Exception:
                ok = False
            actual["t_inverse_ok"] = ok
        if "psi_ok" in expected:
            ok = True
            try:
                for k in range(1, n + 1):
                    res = _lef.pairing_psi(struct, k)
                    ok = ok and res.parity_ok and res.nondegenerate
            except Exception:
                ok = False
            actual["psi_ok"] = ok
        if "vaisman" in expected:
            actual["vaisman"] = vaisman_candidate_report(struct).verdict
    if contact is not None:
        if "reeb_field" in expected:
            actual["reeb_field"] = str(contact.xi)
        if "lefschetz_contact" in expected:
            actual["lefschetz_contact"] = [
                _lef.is_graph_of_isomorphism(
                    _lef.contact_lefschetz_relation(contact, k)
                ).is_graph_of_isomorphism
                for k in range(contact.n + 1)]
    return actual


def run_suite(entries=None) -> dict:
    """Compare expected with actual over the catalog; returns the report."""
    if entries is None:
        entries = builtin_entries()
    results = []
    all_ok = True
    for entry in entries:
        actual = run_entry(entry)
        diffs = []
        for key, spec in entry.expected.items():
            got = actual.get(key)
            if got != spec["value"]:
                diffs.append({"check": key, "expected": spec["value"],
                              "actual": got, "source": spec["source"]})
        flags_ok = (entry.model.is_nilpotent == entry.nilpotent
                    and entry.model.is_unimodular == entry.unimodular)
        if not flags_ok:
            diffs.append({"check": "model_flags",
                          "expected": [entry.nilpotent, entry.unimodular],
                          "actual": [entry.model.is_nilpotent,
                                     entry.model.is_unimodular],
                          "source": "definition"})
        fp = entry_fingerprint(entry.expected)
        if entry.fingerprint and fp != entry.fingerprint:
            diffs.append({"check": "fingerprint",
                          "expected": entry.fingerprint, "actual": fp,
                          "source": "frozen"})
        ok = not diffs
        all_ok = all_ok and ok
        results.append({"name": entry.name, "kind": entry.kind,
                        "structure": entry.model.structure_string(),
                        "ok": ok, "checks": sorted(entry.expected),
                        "diffs": diffs})
    return {"ok": all_ok, "entries": results}
