"""Lossless persistence of configurations and JSON reports."""

import dataclasses
import json
import math

import numpy as np

from .configuration import Configuration

SCHEMA = "jampack-config/1"
_FIELDS = {"schema", "box", "radius", "centers", "metadata"}


class SchemaError(ValueError):
    """Malformed or unsupported configuration file."""


def write_config(config: Configuration, path):
    """Write a configuration as versioned JSON; floats keep full precision
    (shortest round-trip decimal), so write/read is lossless."""
    doc = {
        "schema": SCHEMA,
        "box": "plane" if config.box is None else [config.box[0],
                                                   config.box[1]],
        "radius": config.radius,
        "centers": [[float(x), float(y)] for x, y in config.centers],
        "metadata": config.metadata,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def read_config(path) -> Configuration:
    """Read a configuration file; unknown fields, missing fields, version
    mismatches and non-finite coordinates are rejected by name."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise SchemaError("malformed configuration file %s: %s" % (path, e))
    if not isinstance(doc, dict):
        raise SchemaError("configuration file must be a JSON object")
    unknown = set(doc) - _FIELDS
    if unknown:
        raise SchemaError("unknown field(s): %s" % ", ".join(sorted(unknown)))
    for name in ("schema", "box", "radius", "centers"):
        if name not in doc:
            raise SchemaError("missing field: %s" % name)
    if doc["schema"] != SCHEMA:
        raise SchemaError("unsupported schema version: %r" % doc["schema"])
    box = doc["box"]
    if box == "plane":
        box = None
    elif (isinstance(box, list) and len(box) == 2):
        box = (float(box[0]), float(box[1]))
    else:
        raise SchemaError("box must be [width, height] or \"plane\"")
    centers = np.array(doc["centers"], dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(centers)) or not math.isfinite(doc["radius"]):
        raise SchemaError("non-finite coordinate in configuration file")
    return Configuration(float(doc["radius"]), centers, box,
                         doc.get("metadata", {}))


def write_csv(config: Configuration, path):
    """CSV export: a radius header line, then one x,y row per disc."""
    with open(path, "w") as fh:
        fh.write("radius,%r\n" % config.radius)
        fh.write("x,y\n")
        for x, y in config.centers:
            fh.write("%r,%r\n" % (float(x), float(y)))


def _to_jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: _to_jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): _to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    return obj


def report_dict(report) -> dict:
    """Dataclass report (JammingReport, ChainStats, AssemblyMetrics, ...)
    as a JSON-ready dict with stable field ordering."""
    out = _to_jsonable(report)
    if not isinstance(out, dict):
        raise TypeError("report must be a dataclass instance")
    return out


def write_report(report, path):
    """Write any report dataclass as machine-readable JSON."""
    try:
        with open(path, "w") as fh:
            json.dump(report_dict(report), fh, indent=1)
            fh.write("\n")
    except OSError as e:
        raise OSError("failed to write report to %s: %s" % (path, e))
