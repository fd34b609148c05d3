//! Python bindings for the catlaw toolkit.
//!
//! Exposes finite categories, functors, transformations, monads,
//! comonads and distributive laws as Python classes, a handful of
//! enumeration helpers, and the check-document runner.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use catlaw::distlaw::{self, Companion};
use catlaw::fincat::{self, FinCategory, FunctorData, NatTransData};
use catlaw::monad::{self, ComonadData, MonadData};
use catlaw::oracle;

fn err(e: catlaw::CatError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn report_lines(r: &catlaw::Report) -> Vec<String> {
    r.violations
        .iter()
        .map(|v| format!("{}: {}", v.law, v.witness))
        .collect()
}

/// A finite category backed by dense composition tables.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Category {
    inner: Arc<FinCategory>,
}

#[pymethods]
impl Category {
    /// The chain poset 0 < 1 < ... < n-1.
    #[staticmethod]
    fn chain(n: usize) -> Self {
        Category {
            inner: Arc::new(FinCategory::chain(n)),
        }
    }

    /// The group Z/2 as a one-object category.
    #[staticmethod]
    fn z2() -> Self {
        Category {
            inner: Arc::new(FinCategory::z2()),
        }
    }

    /// A poset category from its `leq` relation matrix.
    #[staticmethod]
    fn poset(leq: Vec<Vec<bool>>) -> PyResult<Self> {
        Ok(Category {
            inner: Arc::new(FinCategory::from_poset(&leq).map_err(err)?),
        })
    }

    /// A one-object category from a monoid multiplication table.
    #[staticmethod]
    fn monoid(table: Vec<Vec<usize>>, unit: usize) -> PyResult<Self> {
        Ok(Category {
            inner: Arc::new(FinCategory::from_monoid(&table, unit).map_err(err)?),
        })
    }

    fn objects(&self) -> usize {
        self.inner.objects
    }

    fn morphisms(&self) -> usize {
        self.inner.morphisms.len()
    }

    fn is_thin(&self) -> bool {
        self.inner.is_thin()
    }

    fn validate(&self) -> PyResult<Vec<String>> {
        Ok(report_lines(&fincat::validate_category(&self.inner).map_err(err)?))
    }

    fn compose(&self, g: usize, f: usize) -> PyResult<usize> {
        fincat::compose(&self.inner, g, f).map_err(err)
    }

    fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.inner.hom(x, y)
    }

    fn __repr__(&self) -> String {
        format!(
            "Category(objects={}, morphisms={})",
            self.inner.objects,
            self.inner.morphisms.len()
        )
    }
}

/// A functor between finite categories.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Functor {
    inner: FunctorData,
}

#[pymethods]
impl Functor {
    #[staticmethod]
    fn identity(c: &Category) -> Self {
        Functor {
            inner: FunctorData::identity(&c.inner),
        }
    }

    /// Built from an object table; the morphism table is forced when the
    /// target is thin, otherwise it must be given.
    #[staticmethod]
    #[pyo3(signature = (source, target, objects, morphisms=None))]
    fn tables(
        source: &Category,
        target: &Category,
        objects: Vec<usize>,
        morphisms: Option<Vec<usize>>,
    ) -> PyResult<Self> {
        let inner = match morphisms {
            None => fincat::functor_from_objects(&source.inner, &target.inner, objects)
                .map_err(err)?,
            Some(morphism_map) => FunctorData {
                source: source.inner.clone(),
                target: target.inner.clone(),
                object_map: objects,
                morphism_map,
            },
        };
        Ok(Functor { inner })
    }

    fn compose(&self, inner: &Functor) -> PyResult<Functor> {
        Ok(Functor {
            inner: fincat::compose_functors(&self.inner, &inner.inner).map_err(err)?,
        })
    }

    fn power(&self, n: usize) -> PyResult<Functor> {
        Ok(Functor {
            inner: fincat::functor_power(&self.inner, n).map_err(err)?,
        })
    }

    fn validate(&self) -> PyResult<Vec<String>> {
        Ok(report_lines(&fincat::validate_functor(&self.inner).map_err(err)?))
    }

    fn object_map(&self) -> Vec<usize> {
        self.inner.object_map.clone()
    }

    fn morphism_map(&self) -> Vec<usize> {
        self.inner.morphism_map.clone()
    }

    fn __eq__(&self, other: &Functor) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Functor(objects={:?})", self.inner.object_map)
    }
}

/// A natural transformation between two parallel functors.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct NatTrans {
    inner: NatTransData,
}

#[pymethods]
impl NatTrans {
    #[new]
    fn new(source: &Functor, target: &Functor, components: Vec<usize>) -> Self {
        NatTrans {
            inner: NatTransData {
                source: source.inner.clone(),
                target: target.inner.clone(),
                components,
            },
        }
    }

    #[staticmethod]
    fn identity(f: &Functor) -> Self {
        NatTrans {
            inner: NatTransData::identity(&f.inner),
        }
    }

    /// The unique transformation forced by a thin ambient category.
    #[staticmethod]
    fn forced(source: &Functor, target: &Functor) -> PyResult<Self> {
        Ok(NatTrans {
            inner: fincat::forced_nat_trans(&source.inner, &target.inner).map_err(err)?,
        })
    }

    fn validate(&self) -> PyResult<Vec<String>> {
        Ok(report_lines(&fincat::validate_nat_trans(&self.inner).map_err(err)?))
    }

    fn components(&self) -> Vec<usize> {
        self.inner.components.clone()
    }

    fn vcompose(&self, first: &NatTrans) -> PyResult<NatTrans> {
        Ok(NatTrans {
            inner: fincat::vcompose(&self.inner, &first.inner).map_err(err)?,
        })
    }

    fn hcompose(&self, inner: &NatTrans) -> PyResult<NatTrans> {
        Ok(NatTrans {
            inner: fincat::hcompose(&self.inner, &inner.inner).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &NatTrans) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("NatTrans(components={:?})", self.inner.components)
    }
}

/// A monad on a finite category.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Monad {
    inner: MonadData,
}

#[pymethods]
impl Monad {
    #[new]
    fn new(functor: &Functor, mu: &NatTrans, eta: &NatTrans) -> Self {
        Monad {
            inner: MonadData {
                functor: functor.inner.clone(),
                mu: mu.inner.clone(),
                eta: eta.inner.clone(),
            },
        }
    }

    #[staticmethod]
    fn identity(c: &Category) -> Self {
        Monad {
            inner: MonadData::identity(&c.inner),
        }
    }

    /// The monad of a closure operator on a thin category.
    #[staticmethod]
    fn closure(c: &Category, image: Vec<usize>) -> PyResult<Self> {
        Ok(Monad {
            inner: MonadData::closure(&c.inner, &image).map_err(err)?,
        })
    }

    fn validate(&self) -> PyResult<Vec<String>> {
        Ok(report_lines(&monad::validate_monad(&self.inner).map_err(err)?))
    }

    /// Number of algebras of the explicit Eilenberg-Moore category.
    fn em_object_count(&self) -> PyResult<usize> {
        Ok(monad::build_em(&self.inner).map_err(err)?.algebras.len())
    }

    /// The algebras as (carrier, action) pairs.
    fn em_algebras(&self) -> PyResult<Vec<(usize, usize)>> {
        Ok(monad::build_em(&self.inner)
            .map_err(err)?
            .algebras
            .iter()
            .map(|a| (a.carrier, a.action))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Monad(carrier={:?})", self.inner.functor.object_map)
    }
}

/// A comonad on a finite category.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Comonad {
    inner: ComonadData,
}

#[pymethods]
impl Comonad {
    #[new]
    fn new(functor: &Functor, delta: &NatTrans, epsilon: &NatTrans) -> Self {
        Comonad {
            inner: ComonadData {
                functor: functor.inner.clone(),
                delta: delta.inner.clone(),
                epsilon: epsilon.inner.clone(),
            },
        }
    }

    /// The comonad of an interior operator on a thin category.
    #[staticmethod]
    fn interior(c: &Category, image: Vec<usize>) -> PyResult<Self> {
        Ok(Comonad {
            inner: ComonadData::interior(&c.inner, &image).map_err(err)?,
        })
    }

    fn validate(&self) -> PyResult<Vec<String>> {
        Ok(report_lines(&monad::validate_comonad(&self.inner).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Comonad(carrier={:?})", self.inner.functor.object_map)
    }
}

fn companion_of(obj: &Bound<'_, PyAny>) -> PyResult<Companion> {
    if let Ok(f) = obj.extract::<PyRef<Functor>>() {
        return Ok(Companion::Endofunctor(f.inner.clone()));
    }
    if let Ok(w) = obj.extract::<PyRef<Comonad>>() {
        return Ok(Companion::Comonad(w.inner.clone()));
    }
    Err(PyValueError::new_err(
        "companion must be a Functor or a Comonad",
    ))
}

/// A distributive law l : TG => GT.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct DistLaw {
    inner: distlaw::DistLawData,
}

#[pymethods]
impl DistLaw {
    #[new]
    fn new(monad: &Monad, companion: &Bound<'_, PyAny>, law: &NatTrans) -> PyResult<Self> {
        Ok(DistLaw {
            inner: distlaw::DistLawData {
                monad: monad.inner.clone(),
                companion: companion_of(companion)?,
                law: law.inner.clone(),
            },
        })
    }

    /// The unique valid law for the pair, when exactly one exists.
    #[staticmethod]
    fn synthesize(monad: &Monad, companion: &Bound<'_, PyAny>) -> PyResult<Self> {
        let comp = companion_of(companion)?;
        let laws =
            oracle::enumerate_dist_laws(&monad.inner, &comp, oracle::DEFAULT_BOUND).map_err(err)?;
        match laws.len() {
            1 => Ok(DistLaw {
                inner: laws.into_iter().next().unwrap(),
            }),
            n => Err(PyValueError::new_err(format!(
                "expected exactly one law, found {n}"
            ))),
        }
    }

    fn validate(&self) -> PyResult<Vec<String>> {
        Ok(report_lines(&distlaw::validate_dist_law(&self.inner).map_err(err)?))
    }

    fn components(&self) -> Vec<usize> {
        self.inner.law.components.clone()
    }

    /// Object table of the lifted endofunctor on the EM category.
    fn lift_objects(&self) -> PyResult<Vec<usize>> {
        let em = monad::build_em(&self.inner.monad).map_err(err)?;
        Ok(distlaw::lift_from_law(&self.inner, &em)
            .map_err(err)?
            .endofunctor
            .object_map)
    }

    fn __repr__(&self) -> String {
        format!("DistLaw(components={:?})", self.inner.law.components)
    }
}

/// Number of endofunctors of a category.
#[pyfunction]
#[pyo3(signature = (c, bound=None))]
fn count_endofunctors(c: &Category, bound: Option<usize>) -> PyResult<usize> {
    Ok(oracle::enumerate_functors(&c.inner, bound.unwrap_or(oracle::DEFAULT_BOUND))
        .map_err(err)?
        .len())
}

/// Number of monads on a category.
#[pyfunction]
#[pyo3(signature = (c, bound=None))]
fn count_monads(c: &Category, bound: Option<usize>) -> PyResult<usize> {
    Ok(oracle::enumerate_monads(&c.inner, bound.unwrap_or(oracle::DEFAULT_BOUND))
        .map_err(err)?
        .len())
}

/// Number of natural transformations between two parallel functors.
#[pyfunction]
#[pyo3(signature = (f, g, bound=None))]
fn count_nat_trans(f: &Functor, g: &Functor, bound: Option<usize>) -> PyResult<usize> {
    Ok(
        oracle::enumerate_nat_trans(&f.inner, &g.inner, bound.unwrap_or(oracle::DEFAULT_BOUND))
            .map_err(err)?
            .len(),
    )
}

/// Number of distributive laws for a monad and companion.
#[pyfunction]
#[pyo3(signature = (monad, companion, bound=None))]
fn count_laws(
    monad: &Monad,
    companion: &Bound<'_, PyAny>,
    bound: Option<usize>,
) -> PyResult<usize> {
    let comp = companion_of(companion)?;
    Ok(
        oracle::enumerate_dist_laws(&monad.inner, &comp, bound.unwrap_or(oracle::DEFAULT_BOUND))
            .map_err(err)?
            .len(),
    )
}

/// Checks the law/lift bijection for a pair, returning (laws, lifts, ok).
#[pyfunction]
fn beck_roundtrip(monad: &Monad, companion: &Bound<'_, PyAny>) -> PyResult<(u64, u64, bool)> {
    let comp = companion_of(companion)?;
    let report = distlaw::check_beck_roundtrip(&monad.inner, &comp, oracle::DEFAULT_BOUND)
        .map_err(err)?;
    Ok((
        report.counts.get("laws").copied().unwrap_or(0),
        report.counts.get("lifts").copied().unwrap_or(0),
        report.ok,
    ))
}

/// Runs a check document and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (text, bound=None))]
fn run_document(text: &str, bound: Option<usize>) -> PyResult<String> {
    let result = catlaw::dsl::run_document(text, bound.unwrap_or(oracle::DEFAULT_BOUND))
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(catlaw::dsl::render_json(&result))
}

/// Runs a check document and returns the catlaw exit code (0, 1 or 2).
#[pyfunction]
#[pyo3(signature = (text, bound=None))]
fn check_document(text: &str, bound: Option<usize>) -> PyResult<i32> {
    match catlaw::dsl::run_document(text, bound.unwrap_or(oracle::DEFAULT_BOUND)) {
        Ok(result) => Ok(result.exit_code()),
        Err(_) => Ok(2),
    }
}

#[pymodule]
fn pycatlaw(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Category>()?;
    m.add_class::<Functor>()?;
    m.add_class::<NatTrans>()?;
    m.add_class::<Monad>()?;
    m.add_class::<Comonad>()?;
    m.add_class::<DistLaw>()?;
    m.add_function(wrap_pyfunction!(count_endofunctors, m)?)?;
    m.add_function(wrap_pyfunction!(count_monads, m)?)?;
    m.add_function(wrap_pyfunction!(count_nat_trans, m)?)?;
    m.add_function(wrap_pyfunction!(count_laws, m)?)?;
    m.add_function(wrap_pyfunction!(beck_roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(run_document, m)?)?;
    m.add_function(wrap_pyfunction!(check_document, m)?)?;
    Ok(())
}
