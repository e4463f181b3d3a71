#!/usr/bin/env python3
"""Regenerate the FCIDUMP fixture bundle with PySCF.

Usage: python3 scripts/generate_fixtures.py [output_dir]

Writes fixtures/<molecule>/R<r>.fcidump for every grid point plus a
manifest.json describing the active space, encoding and symmetry setup that
the C++ library consumes. Integrals are written in Molpro FCIDUMP layout
(chemists' notation, 1-based indices, unique 8-fold images only).
"""

import json
import os
import sys

import numpy as np
from pyscf import __version__ as pyscf_version
from pyscf import ao2mo, gto, mcscf, scf, symm

WRITE_TOL = 1e-14
MOLPRO_C2V = {"A1": 1, "B1": 2, "B2": 3, "A2": 4}


def grid(start, stop, step):
    n = int(round((stop - start) / step)) + 1
    return [round(start + i * step, 10) for i in range(n)]


def write_fcidump(path, h1, eri, ecore, nelec, orbsym):
    norb = h1.shape[0]
    with open(path, "w") as f:
        f.write(f" &FCI NORB={norb:d},NELEC={nelec:d},MS2=0,\n")
        f.write("  ORBSYM=" + ",".join(str(s) for s in orbsym) + ",\n")
        f.write("  ISYM=1,\n &END\n")
        for i in range(norb):
            for j in range(i + 1):
                for k in range(norb):
                    for l in range(k + 1):
                        if i * (i + 1) // 2 + j < k * (k + 1) // 2 + l:
                            continue
                        v = eri[i, j, k, l]
                        if abs(v) > WRITE_TOL:
                            f.write(f"{v: .16e} {i + 1:4d} {j + 1:4d} {k + 1:4d} {l + 1:4d}\n")
        for i in range(norb):
            for j in range(i + 1):
                if abs(h1[i, j]) > WRITE_TOL:
                    f.write(f"{h1[i, j]: .16e} {i + 1:4d} {j + 1:4d}    0    0\n")
        f.write(f"{ecore: .16e}    0    0    0    0\n")


def rhf(mol):
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.max_cycle = 200
    mf.kernel()
    if not mf.converged:
        raise RuntimeError(f"RHF did not converge for {mol.atom}")
    return mf


def active_integrals(mf, active, ncas, nelecas):
    mc = mcscf.CASCI(mf, ncas, nelecas)
    mo = mc.sort_mo([a + 1 for a in active])
    h1, ecore = mc.get_h1eff(mo)
    eri = ao2mo.restore(1, mc.get_h2eff(mo), ncas)
    return h1, eri, ecore


def labels_of(mol, mf):
    return list(symm.label_orb_symm(mol, mol.irrep_name, mol.symm_orb, mf.mo_coeff))


def h2(r):
    mol = gto.M(atom=f"H 0 0 0; H 0 0 {r}", basis="sto-3g", symmetry="C2v", verbose=0)
    mf = rhf(mol)
    labels = labels_of(mol, mf)
    h1 = mf.mo_coeff.T @ mf.get_hcore() @ mf.mo_coeff
    eri = ao2mo.restore(1, ao2mo.kernel(mol, mf.mo_coeff), 2)
    return h1, eri, mol.energy_nuc(), 2, labels, [0, 1]


def lih(r):
    mol = gto.M(atom=f"Li 0 0 0; H 0 0 {r}", basis="sto-3g", symmetry="C2v", verbose=0)
    mf = rhf(mol)
    labels = labels_of(mol, mf)
    # Li 1s frozen; the first three remaining sigma (A1) orbitals are active.
    active = [i for i in range(1, len(labels)) if labels[i] == "A1"][:3]
    h1, eri, ecore = active_integrals(mf, active, 3, 2)
    return h1, eri, ecore, 2, [labels[a] for a in active], active


def h2o(r, angle=104.5):
    th = np.radians(angle / 2)
    # Molecular plane is xz, so in-plane antisymmetric orbitals are B1.
    atom = (f"O 0 0 0; H {r * np.sin(th)} 0 {r * np.cos(th)}; "
            f"H {-r * np.sin(th)} 0 {r * np.cos(th)}")
    mol = gto.M(atom=atom, basis="6-31g", symmetry="C2v", verbose=0)
    mf = rhf(mol)
    labels = labels_of(mol, mf)
    nocc = mol.nelectron // 2
    in_plane = ("A1", "B1")
    occ = [i for i in range(nocc) if labels[i] in in_plane][-2:]
    vir_a1 = next(i for i in range(nocc, len(labels)) if labels[i] == "A1")
    vir_b1 = next(i for i in range(nocc, len(labels)) if labels[i] == "B1")
    active = sorted(occ + [vir_a1, vir_b1])
    h1, eri, ecore = active_integrals(mf, active, 4, 4)
    return h1, eri, ecore, 4, [labels[a] for a in active], active


MOLECULES = {
    "h2": {
        "builder": h2,
        "grid": grid(0.5, 2.5, 0.1),
        "manifest": {
            "molecule": "H2",
            "basis": "STO-3G",
            "geometry": "H-H distance R in Angstrom along z",
            "active_space": "full (2 orbitals, 2 electrons)",
            "encoding": "bk",
            "spin_ordering": "interleaved",
            "reference_geometry": 1.0,
            "stationary_qubits": [1, 3],
            "point_group": None,
            "symmetries": {
                "number": {"target": 2, "spectrum": [0, 2, 4]},
                "sz": {"target": 0},
            },
            "qcc_entanglers": [],
        },
    },
    "lih": {
        "builder": lih,
        "grid": grid(1.0, 4.0, 0.2),
        "manifest": {
            "molecule": "LiH",
            "basis": "STO-3G",
            "geometry": "Li-H distance R in Angstrom along z",
            "active_space": ("Li 1s frozen; first three remaining A1 (sigma) canonical RHF "
                             "orbitals; 2 active electrons"),
            "encoding": "parity",
            "spin_ordering": "blocked",
            "reference_geometry": 3.2,
            "stationary_qubits": [2, 5],
            "point_group": "C2v",
            "symmetries": {
                "number": {"target": 2, "spectrum": [0, 2, 4, 6],
                           "filter_above": [4, 6]},
                "s2": {"target_s": 0, "annihilate_s": [1], "spectrum": [0, 2]},
                "sz": {"target": 0},
                "lq": {"target": 2, "support": [0, 1]},
            },
            "qcc_entanglers": ["X2 X1 Y0"],
        },
    },
    "h2o": {
        "builder": h2o,
        "grid": grid(0.75, 2.35, 0.2),
        "manifest": {
            "molecule": "H2O",
            "basis": "6-31G",
            "geometry": ("symmetric O-H stretch R in Angstrom, H-O-H angle 104.5 degrees, "
                         "molecule in the xz plane"),
            "active_space": ("two highest occupied in-plane (A1/B1) canonical RHF orbitals plus "
                             "the lowest virtual A1 and B1; 4 active electrons"),
            "encoding": "bk",
            "spin_ordering": "blocked",
            "reference_geometry": 1.95,
            "stationary_qubits": [3, 7],
            "point_group": "C2v",
            "symmetries": {
                "number": {"target": 4, "spectrum": [0, 2, 4, 6, 8],
                           "filter_above": [6, 8]},
                "s2": {"target_s": 0, "annihilate_s": [1, 2], "spectrum": [0, 2, 6]},
                "s2_triplet": {"target_s": 1, "annihilate_s": [0, 2], "spectrum": [0, 2, 6]},
                "sz": {"target": 0},
                "irrep": {"target": "B1"},
                "lq": {"target": 4, "support": [0, 1, 2]},
            },
            "qcc_entanglers": ["X5 X4 X3 X2 X1 Y0", "X4 X3 X1 Y0", "Y2 X0", "X4 Y1", "X3 Y5"],
        },
    },
}


def main():
    out_root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")
    for name, cfg in MOLECULES.items():
        out_dir = os.path.join(out_root, name)
        os.makedirs(out_dir, exist_ok=True)
        points = []
        for r in cfg["grid"]:
            h1, eri, ecore, nelec, irreps, active = cfg["builder"](r)
            fname = f"R{r:.2f}.fcidump"
            write_fcidump(os.path.join(out_dir, fname), h1, eri, ecore, nelec,
                          [MOLPRO_C2V[l] for l in irreps])
            points.append({"R": r, "file": fname, "active_mo_indices": active,
                           "orbital_irreps": irreps})
            print(f"{name} R={r:.2f} active={active} irreps={irreps}")
        manifest = dict(cfg["manifest"])
        manifest["generator"] = f"pyscf {pyscf_version}, scripts/generate_fixtures.py"
        manifest["points"] = points
        with open(os.path.join(out_dir, "manifest.json"), "w") as f:
            json.dump(manifest, f, indent=2)
            f.write("\n")


if __name__ == "__main__":
    main()
