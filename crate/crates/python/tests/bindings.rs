use desitter_core::{c64, ComplexMatrix};
use desitter_py::{desitter_module, matrix_to_rows, rows_to_matrix};
use pyo3::prelude::*;
use pyo3::types::PyDict;

#[test]
fn rows_round_trip() {
    let m = ComplexMatrix::from_fn(3, |i, j| c64(i as f64, j as f64 - 1.0));
    let back = rows_to_matrix(&matrix_to_rows(&m)).unwrap();
    assert_eq!(back.max_abs_diff(&m), 0.0);
}

#[test]
fn ragged_rows_rejected() {
    let rows = vec![vec![c64(1.0, 0.0), c64(0.0, 0.0)], vec![c64(1.0, 0.0)]];
    assert!(rows_to_matrix(&rows).is_err());
}

#[test]
fn module_runs_in_embedded_interpreter() {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "desitter").unwrap();
        desitter_module(&m).unwrap();
        let locals = PyDict::new(py);
        locals.set_item("ds", &m).unwrap();
        let code = c"
g = ds.sp4_generators()
c = g['L1'].commutator(g['L2'])
err = (c - 1j * g['L3']).max_abs()
r = ds.verify('matrix')
ok = r['failed'] == 0 and r['passed'] > 0
levels = ds.spectrum('H', 6)
";
        py.run(code, None, Some(&locals)).unwrap();
        let err: f64 = locals.get_item("err").unwrap().unwrap().extract().unwrap();
        assert!(err < 1e-12);
        let ok: bool = locals.get_item("ok").unwrap().unwrap().extract().unwrap();
        assert!(ok);
        let levels: Vec<(f64, usize)> = locals.get_item("levels").unwrap().unwrap().extract().unwrap();
        for (k, &(value, mult)) in levels.iter().take(4).enumerate() {
            assert!((value - 0.5 * (k + 1) as f64).abs() < 1e-10);
            assert_eq!(mult, k + 1);
        }
    });
}
