//! Python bindings. Every function returns plain Python objects decoded from the
//! same JSON reports the command-line tool prints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use semihopf::cli::{self, EXIT_BAD_INPUT};

fn decode<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn invoke<'py>(py: Python<'py>, args: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
    let out = py.detach(|| cli::run(std::iter::once("semihopf".to_string()).chain(args)));
    if out.code == EXIT_BAD_INPUT {
        return Err(PyValueError::new_err(out.stderr.trim().to_string()));
    }
    decode(py, &out.stdout)
}

fn budget_args(budget: Option<u64>) -> Vec<String> {
    budget
        .map(|b| vec!["--budget".into(), b.to_string()])
        .unwrap_or_default()
}

/// Runs the command-line tool with `args` and returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run<'py>(py: Python<'py>, args: Vec<String>) -> PyResult<Bound<'py, PyTuple>> {
    let out = py.detach(|| cli::run(std::iter::once("semihopf".to_string()).chain(args)));
    PyTuple::new(
        py,
        [
            out.code.into_pyobject(py)?.into_any(),
            out.stdout.into_pyobject(py)?.into_any(),
            out.stderr.into_pyobject(py)?.into_any(),
        ],
    )
}

/// Algebra-type census for one dimension.
#[pyfunction]
#[pyo3(signature = (dim, rules="all", n=None, oracle=None, improper=false, budget=None))]
fn census<'py>(
    py: Python<'py>,
    dim: u64,
    rules: &str,
    n: Option<u64>,
    oracle: Option<Vec<String>>,
    improper: bool,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let mut args = budget_args(budget);
    args.extend([
        "census".into(),
        "--dim".into(),
        dim.to_string(),
        "--rules".into(),
        rules.into(),
    ]);
    if let Some(n) = n {
        args.extend(["--n".into(), n.to_string()]);
    }
    if improper {
        args.push("--improper".into());
    }
    if let Some(types) = oracle {
        args.push("--oracle".into());
        args.extend(types);
    }
    invoke(py, args)
}

/// Searches for a fusion datum of the given type, e.g. `"1,2;2,1"`.
#[pyfunction]
#[pyo3(signature = (ty, profile="hopf", budget=None))]
fn fusion_search<'py>(py: Python<'py>, ty: &str, profile: &str, budget: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let mut args = budget_args(budget);
    args.extend([
        "fusion-search".into(),
        "--type".into(),
        ty.into(),
        "--profile".into(),
        profile.into(),
    ]);
    invoke(py, args)
}

/// Checks the fusion axioms on the character ring of a built-in group.
#[pyfunction]
#[pyo3(signature = (group, profile="hopf"))]
fn fusion_verify_group<'py>(py: Python<'py>, group: &str, profile: &str) -> PyResult<Bound<'py, PyAny>> {
    invoke(
        py,
        vec![
            "fusion-verify".into(),
            "--group".into(),
            group.into(),
            "--profile".into(),
            profile.into(),
        ],
    )
}

/// Algebra type of the Drinfeld double of a group, as a string.
#[pyfunction]
fn double_type(py: Python<'_>, group: &str) -> PyResult<String> {
    invoke(py, vec!["double".into(), "--group".into(), group.into()])?
        .get_item("type")?
        .extract()
}

#[pyfunction]
fn h8_report<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    invoke(py, vec!["h8-report".into()])
}

/// Twists a group algebra; `bicharacter` is a JSON matrix of turns such as `[["0","1/2"],["1/2","0"]]`.
#[pyfunction]
#[pyo3(signature = (group, subgroup, bicharacter, check_cocommutative=false, group_likes=false))]
fn twist<'py>(
    py: Python<'py>,
    group: &str,
    subgroup: &str,
    bicharacter: &str,
    check_cocommutative: bool,
    group_likes: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let mut args: Vec<String> = vec![
        "twist".into(),
        "--group".into(),
        group.into(),
        "--subgroup".into(),
        subgroup.into(),
        "--bicharacter".into(),
        bicharacter.into(),
    ];
    if check_cocommutative {
        args.push("--check-cocommutative".into());
    }
    if group_likes {
        args.push("--group-likes".into());
    }
    invoke(py, args)
}

#[pymodule]
fn semihopf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(fusion_search, m)?)?;
    m.add_function(wrap_pyfunction!(fusion_verify_group, m)?)?;
    m.add_function(wrap_pyfunction!(double_type, m)?)?;
    m.add_function(wrap_pyfunction!(h8_report, m)?)?;
    m.add_function(wrap_pyfunction!(twist, m)?)?;
    Ok(())
}
