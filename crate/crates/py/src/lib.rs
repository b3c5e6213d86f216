//! Python bindings: the hypergraph type plus the detection, counting,
//! stability and constant-certification entry points. Structured reports
//! cross the boundary as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fanostab::census;
use fanostab::constants;
use fanostab::detect;
use fanostab::hypergraph::{ex_fano as ex_fano_rs, Generator, Hypergraph3, VertexSet};
use fanostab::stability::{run_stability, Mode, StabilityConfig};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_generator(kind: &str, n: Option<usize>) -> PyResult<Generator> {
    match (kind, n) {
        ("fano", _) => Ok(Generator::Fano),
        ("tetrahedron", _) => Ok(Generator::Tetrahedron),
        ("octahedron", _) => Ok(Generator::Octahedron),
        ("complete", Some(n)) => Ok(Generator::Complete(n)),
        ("bn", Some(n)) => Ok(Generator::Bn(n)),
        ("complete", None) | ("bn", None) => {
            Err(value_err(format!("kind '{kind}' requires n")))
        }
        (other, _) => Err(value_err(format!("unknown kind '{other}'"))),
    }
}

fn parse_rational_str(s: &str) -> PyResult<num_rational::BigRational> {
    // p/q or decimal, exactly
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: num_bigint::BigInt = p.trim().parse().map_err(value_err)?;
        let den: num_bigint::BigInt = q.trim().parse().map_err(value_err)?;
        return Ok(num_rational::BigRational::new(num, den));
    }
    if let Some((i, f)) = s.split_once('.') {
        if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) {
            return Err(value_err(format!("bad decimal '{s}'")));
        }
        let neg = i.starts_with('-');
        let i = i.trim_start_matches(['-', '+']);
        let int: num_bigint::BigInt = if i.is_empty() {
            0.into()
        } else {
            i.parse().map_err(value_err)?
        };
        let frac: num_bigint::BigInt = f.parse().map_err(value_err)?;
        let scale = num_bigint::BigInt::from(10u32).pow(f.len() as u32);
        let v = num_rational::BigRational::new(int * &scale + frac, scale);
        return Ok(if neg { -v } else { v });
    }
    let int: num_bigint::BigInt = s.parse().map_err(value_err)?;
    Ok(num_rational::BigRational::from_integer(int))
}

/// A 3-uniform hypergraph on labeled vertices 0..n.
#[pyclass(name = "Hypergraph", from_py_object)]
#[derive(Clone)]
struct PyHypergraph {
    inner: Hypergraph3,
}

#[pymethods]
impl PyHypergraph {
    /// Build from an explicit triple list.
    #[new]
    fn new(n: usize, edges: Vec<[usize; 3]>) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: Hypergraph3::new(n, edges).map_err(value_err)?,
        })
    }

    /// Canonical generators: fano, complete, bn, tetrahedron, octahedron.
    #[staticmethod]
    #[pyo3(signature = (kind, n=None))]
    fn generate(kind: &str, n: Option<usize>) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: Hypergraph3::generate(parse_generator(kind, n)?).map_err(value_err)?,
        })
    }

    /// Parse the text file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: Hypergraph3::parse(text).map_err(value_err)?,
        })
    }

    /// Binomial random hypergraph with a fixed seed.
    #[staticmethod]
    fn random(n: usize, p: f64, seed: u64) -> Self {
        PyHypergraph {
            inner: fanostab::random::random_hypergraph(n, p, seed),
        }
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<[usize; 3]> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.vertex_count() {
            return Err(value_err("vertex out of range"));
        }
        Ok(self.inner.degree(v))
    }

    fn codegree(&self, u: usize, v: usize) -> PyResult<u32> {
        if u >= self.inner.vertex_count() || v >= self.inner.vertex_count() || u == v {
            return Err(value_err("bad pair"));
        }
        Ok(self.inner.codegree(u, v))
    }

    fn is_linear(&self) -> bool {
        self.inner.is_linear()
    }

    fn has_edge(&self, a: usize, b: usize, c: usize) -> bool {
        let mut t = [a, b, c];
        t.sort_unstable();
        t[0] != t[1]
            && t[1] != t[2]
            && t[2] < self.inner.vertex_count()
            && self.inner.has_triple(t)
    }

    fn edges_within(&self, vertices: Vec<usize>) -> PyResult<usize> {
        let set = VertexSet::new(vertices).map_err(value_err)?;
        self.inner.edges_within(&set).map_err(value_err)
    }

    /// Induced subhypergraph; returns (hypergraph, map) with map[new] = old.
    fn induced(&self, vertices: Vec<usize>) -> PyResult<(Self, Vec<usize>)> {
        let set = VertexSet::new(vertices).map_err(value_err)?;
        let (sub, map) = self.inner.induced(&set).map_err(value_err)?;
        Ok((PyHypergraph { inner: sub }, map))
    }

    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    fn __repr__(&self) -> String {
        format!(
            "Hypergraph(n={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Exact extremal edge count for n >= 8.
#[pyfunction]
fn ex_fano(n: usize) -> PyResult<u64> {
    ex_fano_rs(n).map_err(value_err)
}

/// Search for a Fano copy; returns (vertices, edges) of a verified witness
/// or None.
#[pyfunction]
fn contains_fano(h: &PyHypergraph) -> Option<(Vec<usize>, Vec<[usize; 3]>)> {
    detect::contains_fano(&h.inner).map(|w| (w.vertices, w.edges))
}

/// Number of distinct copies of `pattern` in `host`.
#[pyfunction]
fn count_copies(host: &PyHypergraph, pattern: &PyHypergraph) -> u64 {
    detect::count_copies(&host.inner, &pattern.inner)
}

/// One embedding of `pattern` into `host` as a vertex map, or None.
#[pyfunction]
fn find_embedding(host: &PyHypergraph, pattern: &PyHypergraph) -> Option<Vec<usize>> {
    detect::find_embedding(&host.inner, &pattern.inner)
}

/// Lexicographically least 4-set spanning all four triples, or None.
#[pyfunction]
fn find_tetrahedron(h: &PyHypergraph) -> Option<Vec<usize>> {
    detect::find_tetrahedron(&h.inner).map(|s| s.as_slice().to_vec())
}

/// Exact octahedron count (fast path).
#[pyfunction]
fn count_octahedra(h: &PyHypergraph) -> u64 {
    census::count_octahedra(&h.inner)
}

/// Exact octahedron count by brute-force enumeration.
#[pyfunction]
fn oracle_count_octahedra(h: &PyHypergraph) -> u64 {
    census::oracle_count_octahedra(&h.inner)
}

/// Octahedron-count lower-bound comparison at alpha = |E|/n^3, as JSON.
#[pyfunction]
fn lemma26_check(h: &PyHypergraph) -> PyResult<String> {
    let rep = census::empirical_check(&h.inner).map_err(value_err)?;
    serde_json::to_string(&rep).map_err(value_err)
}

/// Run the stability pipeline; returns the report JSON (fields A, B, eA,
/// eB, badPairs, trace, certificate).
#[pyfunction]
#[pyo3(signature = (h, delta, mode="relaxed", drop_lower_order=true, seed=0))]
fn run_stability_json(
    h: &PyHypergraph,
    delta: &str,
    mode: &str,
    drop_lower_order: bool,
    seed: u64,
) -> PyResult<String> {
    let mode: Mode = mode.parse().map_err(value_err)?;
    let cfg = StabilityConfig {
        delta: parse_rational_str(delta)?,
        mode,
        drop_lower_order,
        seed,
    };
    let outcome = run_stability(&h.inner, &cfg).map_err(value_err)?;
    Ok(outcome.to_report_json().to_string())
}

/// Certify the constant chain on (0, delta_max]; returns the report JSON.
#[pyfunction]
#[pyo3(signature = (delta_max=None))]
fn verify_constants(delta_max: Option<&str>) -> PyResult<String> {
    let dm = match delta_max {
        Some(s) => parse_rational_str(s)?,
        None => constants::theorem_delta_max(),
    };
    let report = constants::verify_inequalities(&dm).map_err(value_err)?;
    Ok(report.to_json())
}

#[pymodule]
fn fanostab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(ex_fano, m)?)?;
    m.add_function(wrap_pyfunction!(contains_fano, m)?)?;
    m.add_function(wrap_pyfunction!(count_copies, m)?)?;
    m.add_function(wrap_pyfunction!(find_embedding, m)?)?;
    m.add_function(wrap_pyfunction!(find_tetrahedron, m)?)?;
    m.add_function(wrap_pyfunction!(count_octahedra, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_count_octahedra, m)?)?;
    m.add_function(wrap_pyfunction!(lemma26_check, m)?)?;
    m.add_function(wrap_pyfunction!(run_stability_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_constants, m)?)?;
    Ok(())
}
