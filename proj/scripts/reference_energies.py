#!/usr/bin/env python3
"""Write FCI reference energies for every fixture FCIDUMP with PySCF.

Usage: python3 scripts/reference_energies.py [fixtures_dir]

Reads fixtures/<molecule>/manifest.json and the FCIDUMP files it lists, and
writes fixtures/<molecule>/reference.json with, per geometry, the lowest
singlet and triplet energies at the manifest's electron count (core energy
included) and, when a point group is given, the lowest triplet of each irrep.
The tests use these as an oracle independent of the C++ Hamiltonian build.
"""

import json
import os
import sys

import numpy as np
from pyscf import __version__ as pyscf_version
from pyscf import ao2mo, fci
from pyscf.tools import fcidump

MOLPRO_C2V = {1: "A1", 2: "B1", 3: "B2", 4: "A2"}
# PySCF numbers C2v irreps A1=0, A2=1, B1=2, B2=3.
PYSCF_C2V = {"A1": 0, "A2": 1, "B1": 2, "B2": 3}


def lowest(solver, h1, eri, norb, nelec, spin_s, nroots=12, **kw):
    e, ci = solver.kernel(h1, eri, norb, nelec, nroots=nroots, **kw)
    e = np.atleast_1d(e)
    for energy, vec in zip(e, ci if nroots > 1 else [ci]):
        ss, _ = fci.spin_op.spin_square(vec, norb, nelec)
        s = 0.5 * (np.sqrt(1.0 + 4.0 * ss) - 1.0)
        if abs(s - spin_s) < 1e-4:
            return float(energy)
    return None


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")
    for name in sorted(os.listdir(root)):
        manifest_path = os.path.join(root, name, "manifest.json")
        if not os.path.isfile(manifest_path):
            continue
        with open(manifest_path) as f:
            manifest = json.load(f)
        rows = []
        for point in manifest["points"]:
            data = fcidump.read(os.path.join(root, name, point["file"]), verbose=False)
            norb, nelec, ecore = data["NORB"], data["NELEC"], data["ECORE"]
            h1 = data["H1"]
            eri = ao2mo.restore(1, data["H2"], norb)
            pair = (nelec // 2, nelec - nelec // 2)
            solver = fci.direct_spin1.FCI()
            solver.conv_tol = 1e-12
            row = {"R": point["R"]}
            for label, s in (("singlet", 0.0), ("triplet", 1.0)):
                e = lowest(solver, h1, eri, norb, pair, s)
                row[label] = None if e is None else e + ecore
            if manifest.get("point_group") == "C2v":
                orbsym = np.array([PYSCF_C2V[MOLPRO_C2V[o]] for o in data["ORBSYM"]])
                sym_solver = fci.direct_spin1_symm.FCI()
                sym_solver.conv_tol = 1e-12
                sym_solver.orbsym = orbsym
                for irrep, wfnsym in PYSCF_C2V.items():
                    try:
                        e = lowest(sym_solver, h1, eri, norb, pair, 1.0, wfnsym=wfnsym)
                    except Exception:
                        e = None
                    row[f"triplet_{irrep}"] = None if e is None else e + ecore
            rows.append(row)
            print(name, row)
        out = {"generator": f"pyscf {pyscf_version}, scripts/reference_energies.py",
               "electrons": nelec,
               "points": rows}
        with open(os.path.join(root, name, "reference.json"), "w") as f:
            json.dump(out, f, indent=2)
            f.write("\n")


if __name__ == "__main__":
    main()
