"""The analyze command on a small batch file, in both report formats."""

from __future__ import annotations

import tempfile
from pathlib import Path

from holoconn.cli import main

SOURCE = '''
[connection elliptic-xi]
family = elliptic; f12 = "xi"; g22 = "0"; g12 = "0"
report = flat, projective, killing
point = "0, 0"
order = 8

[connection torus]
G^1_22 = "1"; G^2_11 = "1"
symmetric = true
report = curvature, flat, projective
'''

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "demo.conn"
    path.write_text(SOURCE)
    print("exit code:", main(["analyze", str(path)]))
    print("exit code:", main(["analyze", str(path), "--format", "machine", "--report", "flat"]))
