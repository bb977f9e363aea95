"""Exact-arithmetic post-Lie algebra workbench.

Documents are the JSON envelopes used by the `postlie` CLI; pass them as
dicts or as JSON text. Rationals come back as "p/q" strings.
"""
import json as _json

from . import _core
from ._core import FLATTENING_ORDER, TOOL_VERSION, WorkbenchError

__all__ = [
    "FLATTENING_ORDER", "TOOL_VERSION", "WorkbenchError", "run", "certify_algebra", "semidirect", "h2",
    "extract_cocycle", "build_extension", "certify_cocycle", "class_of", "wells",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def run(*args):
    """Run a CLI subcommand in-process. Returns (exit_code, report_dict_or_None, stderr)."""
    code, out, err = _core.run_command([str(a) for a in args])
    return code, (_json.loads(out) if out else None), err


def certify_algebra(doc):
    """Violation report of the post-Lie axioms."""
    return _json.loads(_core.certify_algebra(_text(doc)))


def semidirect(doc, rep_only=False):
    return _json.loads(_core.semidirect(_text(doc), rep_only))


def h2(doc):
    return _json.loads(_core.h2(_text(doc)))


def extract_cocycle(doc):
    return _json.loads(_core.extract_cocycle(_text(doc)))


def build_extension(doc):
    return _json.loads(_core.build_extension(_text(doc)))


def certify_cocycle(doc):
    return _json.loads(_core.certify_cocycle(_text(doc)))


def class_of(doc):
    return _json.loads(_core.class_of(_text(doc)))


def wells(cocycle, pair):
    return _json.loads(_core.wells(_text(cocycle), _text(pair)))
