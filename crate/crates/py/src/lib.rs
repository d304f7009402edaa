use pyo3::prelude::*;

#[pymodule]
fn wmfock_py(_m: &Bound<PyModule>) -> PyResult<()> {
    Ok(())
}
