"""
Command line round trip
=======================

Every solution printed by ``lrnsolve solve`` or ``lrnsolve search`` verifies
with ``lrnsolve verify``.
"""

import json
import subprocess
import sys


def lrnsolve(*args):
    proc = subprocess.run([sys.executable, "-m", "lrnsolve", *args], capture_output=True, text=True)
    return proc.returncode, [json.loads(line) for line in proc.stdout.splitlines()]


code, records = lrnsolve("solve", "--c", "1", "--d", "73", "--n", "6")
for rec in records:
    print(code, rec["kind"], rec["provenance"], rec["payload"])

###############################################################################
code, records = lrnsolve("search", "--c", "7", "--d", "11", "--y-max", "20", "--n-max", "14", "--m-max", "2")
for rec in records:
    if rec["kind"] == "solution":
        p = rec["payload"]
        vcode, _ = lrnsolve("verify", *[f"--{k}={p[k]}" for k in "cdxymn"])
        print((p["x"], p["y"], p["m"], p["n"]), "verify exit", vcode)

###############################################################################
print("inadmissible exit:", lrnsolve("solve", "--c", "3", "--d", "5", "--n", "3")[0])
