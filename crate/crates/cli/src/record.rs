//! Per-input determinant records and the route cross-check behind `det`.

use braidet_core::braid::{BraidWord, TghwParams};
use braidet_core::classify::{quasi_alternating, recognize_family, Qa};
use braidet_core::{burau, closed_form};
use num_bigint::BigUint;
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Route {
    /// Closed-form trace recurrence (family parameters only).
    Closed,
    /// Symbolic reduced Burau matrix and Alexander polynomial.
    Burau,
    /// Integer matrices at t = -1.
    Matrix,
    /// Every applicable route, cross-checked.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Params(TghwParams),
    Word(BraidWord),
}

impl Input {
    pub fn parse_params(text: &str) -> Result<Self> {
        text.parse()
            .map(Input::Params)
            .map_err(|e| Error::Input(format!("{text:?}: {e}")))
    }

    pub fn parse_word(text: &str) -> Result<Self> {
        text.parse()
            .map(Input::Word)
            .map_err(|e| Error::Input(format!("{text:?}: {e}")))
    }

    pub fn word(&self) -> BraidWord {
        match self {
            Input::Params(p) => p.expand(),
            Input::Word(w) => w.clone(),
        }
    }

    fn label(&self) -> String {
        match self {
            Input::Params(p) => p.to_string(),
            Input::Word(w) => format!("word {w:?}", w = w.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsJson {
    pub m1: u32,
    pub m2: u32,
    pub n: u32,
    pub l: i32,
}

impl From<&TghwParams> for ParamsJson {
    fn from(p: &TghwParams) -> Self {
        ParamsJson {
            m1: p.m1(),
            m2: p.m2(),
            n: p.n(),
            l: p.l(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QaJson {
    pub value: &'static str,
    pub reason: &'static str,
}

/// One line of `det` output. Integers are decimal strings so that values of
/// any size survive JSON round trips.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub params: Option<ParamsJson>,
    pub word: String,
    pub determinant: String,
    pub alexander: Option<String>,
    pub family: Option<&'static str>,
    pub qa: QaJson,
    /// Routes that produced `determinant`, in evaluation order.
    pub routes: Vec<&'static str>,
}

/// The determinant of every route that ran, in a fixed order.
#[derive(Debug, Clone, Default)]
pub struct RouteValues {
    pub values: Vec<(&'static str, BigUint)>,
    pub alexander: Option<String>,
}

impl RouteValues {
    /// The common value, or a disagreement error naming every route.
    pub fn agreed(&self, input: &str) -> Result<&BigUint> {
        let (_, first) = self.values.first().expect("at least one route");
        if self.values.iter().all(|(_, v)| v == first) {
            return Ok(first);
        }
        let detail = self
            .values
            .iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        Err(Error::Disagreement {
            input: input.to_string(),
            detail,
        })
    }
}

/// Runs the routes selected by `route` on `input`.
pub fn run_routes(input: &Input, route: Route) -> Result<RouteValues> {
    let word = input.word();
    let mut out = RouteValues::default();
    let params = match input {
        Input::Params(p) => Some(p),
        Input::Word(_) => None,
    };
    if matches!(route, Route::Closed | Route::All) {
        match params {
            Some(p) => {
                out.values.push(("closed", closed_form::det_closed_form(p)));
                if route == Route::All {
                    out.values.push(("oracle", closed_form::matrix_oracle(p)));
                }
            }
            None if route == Route::Closed => {
                return Err(Error::Input(
                    "the closed route needs family parameters, not a braid word".into(),
                ))
            }
            None => {}
        }
    }
    if matches!(route, Route::Matrix | Route::All) {
        out.values.push(("matrix", burau::determinant_fast(&word)));
    }
    if matches!(route, Route::Burau | Route::All) {
        let r = burau::alexander(&word).map_err(|e| Error::Disagreement {
            input: input.label(),
            detail: e.to_string(),
        })?;
        out.values.push(("burau", r.determinant));
        out.alexander = Some(r.alexander.to_string());
    }
    Ok(out)
}

/// Computes one output record, refusing to emit when routes disagree.
pub fn compute(input: &Input, route: Route) -> Result<OutputRecord> {
    let values = run_routes(input, route)?;
    let determinant = values.agreed(&input.label())?.to_string();
    let (params, family, qa) = match input {
        Input::Params(p) => {
            let v = quasi_alternating(p);
            (
                Some(ParamsJson::from(p)),
                Some(recognize_family(p).as_str()),
                QaJson {
                    value: v.value.as_str(),
                    reason: v.reason,
                },
            )
        }
        Input::Word(_) => (
            None,
            None,
            QaJson {
                value: Qa::Unknown.as_str(),
                reason: "no family parameters",
            },
        ),
    };
    Ok(OutputRecord {
        params,
        word: input.word().to_string(),
        determinant,
        alexander: values.alexander,
        family,
        qa,
        routes: values.values.iter().map(|(name, _)| *name).collect(),
    })
}
