# -*- coding: utf-8 -*-
"""
@file
@brief JSON helpers shared by every artifact.
"""
import math
try:
    from ujson import dumps as _dumps, loads as _loads
except ImportError:  # pragma: no cover
    from json import dumps as _dumps, loads as _loads
import numpy

SCHEMA_VERSION = "shift-lock/1"


def to_builtin(obj):
    """
    Converts :epkg:`numpy` scalars and arrays, tuples and objects
    implementing ``to_json`` into builtin types. Infinite floats
    become strings ``'inf'`` or ``'-inf'`` which JSON cannot hold.
    """
    if hasattr(obj, 'to_json'):
        return to_builtin(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_builtin(v) for v in obj]
    if isinstance(obj, numpy.ndarray):
        return [to_builtin(v) for v in obj.tolist()]
    if isinstance(obj, (numpy.bool_, bool)):
        return bool(obj)
    if isinstance(obj, numpy.integer):
        return int(obj)
    if isinstance(obj, (float, numpy.floating)):
        obj = float(obj)
        if math.isinf(obj):
            return 'inf' if obj > 0 else '-inf'
        if math.isnan(obj):
            return 'nan'
        return obj
    return obj


def dumps_artifact(obj, indent=0):
    """
    Serializes an artifact with sorted keys so that identical
    inputs give identical bytes.
    """
    return _dumps(to_builtin(obj), sort_keys=True, indent=indent)


def with_header(kind, payload, config=None):
    """
    Adds the schema version and the configuration echo to an artifact.

    @param      kind        artifact kind (``'certificate'``, ``'gap'``, ...)
    @param      payload     dictionary
    @param      config      configuration echoed in the artifact
    @return                 dictionary
    """
    res = dict(schema=SCHEMA_VERSION, kind=kind)
    if config is not None:
        res['config'] = config
    res.update(payload)
    return res


def load_json_file(filename):
    """
    Loads a JSON file, raises *ValueError* if the content is not valid.
    """
    with open(filename, "r", encoding="utf-8") as f:
        return _loads(f.read())
