"""File formats: Matrix Market matrices, line-per-value vectors (complex as
"re im" pairs), flat key-value manifests, text reports and CSV series."""

import csv
import io
import os

import numpy as np
import scipy.io

from .backward_error import CLASSES, SaddleSystem, Weights
from .structured import KINDS


class ManifestError(ValueError):
    pass


def write_matrix(path, a):
    a = np.atleast_2d(np.asarray(a))
    scipy.io.mmwrite(path, a, precision=17)


def read_matrix(path):
    a = scipy.io.mmread(path)
    if hasattr(a, "toarray"):
        a = a.toarray()
    a = np.asarray(a)
    if np.iscomplexobj(a) and np.all(a.imag == 0):
        a = a.real
    return a


def write_vector(path, v):
    v = np.atleast_1d(np.asarray(v))
    with open(path, "w") as fh:
        for x in v:
            if np.iscomplexobj(v):
                fh.write(f"{x.real:.17g} {x.imag:.17g}\n")
            else:
                fh.write(f"{x:.17g}\n")


def read_vector(path):
    vals = []
    complex_seen = False
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            if len(parts) == 1:
                vals.append(complex(float(parts[0]), 0.0))
            elif len(parts) == 2:
                vals.append(complex(float(parts[0]), float(parts[1])))
                complex_seen = True
            else:
                raise ValueError(f"{path}: bad vector line {line!r}")
    v = np.array(vals)
    return v if complex_seen else v.real


def read_manifest(path):
    """Flat key-value file: one `key = value` per line, '#' comments."""
    out = {}
    with open(path) as fh:
        for ln, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ManifestError(f"{path}:{ln}: expected 'key = value'")
            key, val = line.split("=", 1)
            out[key.strip()] = val.strip()
    out["_dir"] = os.path.dirname(os.path.abspath(path))
    return out


def _resolve(manifest, key):
    if key not in manifest:
        raise ManifestError(f"manifest is missing required key {key!r}")
    return os.path.join(manifest["_dir"], manifest[key])


def _parse_bool(s):
    if s.lower() in ("true", "1", "yes"):
        return True
    if s.lower() in ("false", "0", "no"):
        return False
    raise ManifestError(f"bad boolean {s!r}")


def load_system(manifest):
    """Returns (SaddleSystem, Weights, structure_class, sparsity)."""
    A = read_matrix(_resolve(manifest, "a_path"))
    B = read_matrix(_resolve(manifest, "b_path"))
    C = read_matrix(_resolve(manifest, "c_path"))
    f = read_vector(_resolve(manifest, "f_path"))
    g = read_vector(_resolve(manifest, "g_path"))
    tags = {}
    for key, name in (("a_structure", "A"), ("b_structure", "B"), ("c_structure", "C")):
        if key in manifest and manifest[key] != "none":
            if manifest[key] not in KINDS:
                raise ManifestError(f"unknown structure tag {manifest[key]!r}")
            tags[name] = manifest[key]
    sys = SaddleSystem(A=A, B=B, C=C, f=f, g=g, tags=tags)
    cls = manifest.get("class", "S0")
    if cls not in CLASSES:
        raise ManifestError(f"unknown structure class {cls!r}")
    sparsity = _parse_bool(manifest.get("sparsity", "false"))
    if "preset" in manifest:
        weights = Weights.from_preset(manifest["preset"], sys)
    else:
        try:
            weights = Weights(*(float(manifest[f"w{i}"]) for i in range(1, 6)))
        except KeyError as exc:
            raise ManifestError("manifest needs either 'preset' or w1..w5") from exc
    return sys, weights, cls, sparsity


def load_solution(path, n, m):
    u = read_vector(path)
    if u.size != n + m:
        raise ManifestError(f"solution length {u.size} != n+m = {n + m}")
    return u[:n], u[n:]


def format_report(title, entries):
    """Human-readable block followed by machine-readable key=value lines."""
    buf = io.StringIO()
    buf.write(f"# {title}\n")
    width = max(len(k) for k in entries)
    for k, v in entries.items():
        buf.write(f"#   {k:<{width}} : {_fmt(v)}\n")
    for k, v in entries.items():
        buf.write(f"{k}={_fmt(v)}\n")
    return buf.getvalue()


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.16g}"
    return str(v)


def write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(x) if isinstance(x, (bool, float)) else x for x in row])
