"""Smoke test for the desitter extension module.

Build and install first:
    pip install maturin
    maturin develop -m crates/python/Cargo.toml
"""

import numpy as np

import desitter as ds


def dense(op):
    return np.array(op.tolist(), dtype=complex)


def main():
    gens = {k: np.array(v.tolist()) for k, v in ds.sp4_generators().items()}
    assert sorted(gens) == sorted(ds.generator_labels())
    j = np.array(ds.canonical_j(2).tolist())
    for name, g in gens.items():
        m = -1j * g
        assert np.abs(m.T @ j + j @ m).max() < 1e-12, name
    comm = gens["L1"] @ gens["L2"] - gens["L2"] @ gens["L1"]
    assert np.allclose(comm, 1j * gens["L3"])

    consts = ds.structure_constants()
    assert abs(consts[("L1", "L2")]["L3"] - 1j) < 1e-12

    space = ds.FockSpace(2, 8)
    dirac = ds.dirac_representation(space)
    pipe = ds.pipeline_representation(space)
    worst = max(dirac[k].max_abs_diff(pipe[k]) for k in dirac)
    assert worst < 1e-10, worst
    for op in dirac.values():
        assert op.is_hermitian(1e-12)

    evals = np.linalg.eigvalsh(dense(dirac["H"]))
    assert abs(evals.min() - 0.5) < 1e-10

    h, jz = ds.chiral_pair(space)
    assert h.max_abs_diff(dirac["H"]) < 1e-10

    basis = ds.sp2n_basis(3)
    assert len(basis) == 21

    report = ds.verify("matrix")
    assert report["failed"] == 0, [c for c in report["checks"] if not c["pass"]]

    try:
        ds.verify("fock", cutoff=2)
    except ValueError as e:
        print("cutoff 2 rejected:", e)
    else:
        raise AssertionError("small cutoff accepted")

    print(ds.table("polynomials").splitlines()[0])
    print("spectrum of H:", ds.spectrum("H", 4)[:3])
    print(f"matrix suite: {report['passed']} checks passed")
    print("smoke test ok")


if __name__ == "__main__":
    main()
