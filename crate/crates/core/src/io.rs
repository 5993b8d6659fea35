//! JSON and text input formats.
//!
//! ```text
//! {"n": 3, "gens": ["x1*x2", "x2*x3"]}                    ideal
//! {"n": 5, "components": [{"gens": ["x1^2", "x2"]}, ..]}   primary components
//! {"n": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]}             hypergraph
//! (x1^2*x2, x3)                                            text ideal
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::asr::SourceIdeal;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::monomial::MonomialIdeal;
use crate::text::{parse_ideal, parse_monomial};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    Auto,
    Ideal,
    Decomposition,
    Hypergraph,
    Text,
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => InputFormat::Auto,
            "ideal" => InputFormat::Ideal,
            "decomposition" => InputFormat::Decomposition,
            "hypergraph" => InputFormat::Hypergraph,
            "text" => InputFormat::Text,
            _ => return Err(Error::parse(1, 1, format!("unknown format '{s}'"))),
        })
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputFormat::Auto => "auto",
            InputFormat::Ideal => "ideal",
            InputFormat::Decomposition => "decomposition",
            InputFormat::Hypergraph => "hypergraph",
            InputFormat::Text => "text",
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealFile {
    n: usize,
    gens: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentFile {
    gens: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionFile {
    n: usize,
    components: Vec<ComponentFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphFile {
    n: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub enum Input {
    Ideal(MonomialIdeal),
    Decomposition(Decomposition),
    Hypergraph(Hypergraph),
}

impl Input {
    /// The ideal the computations run on; hypergraphs contribute their cover
    /// ideal.
    pub fn source(&self) -> Result<SourceIdeal> {
        match self {
            Input::Ideal(i) => SourceIdeal::from_ideal(i.clone()),
            Input::Decomposition(d) => SourceIdeal::from_decomposition(d.clone()),
            Input::Hypergraph(h) => SourceIdeal::from_ideal(h.cover_ideal()?),
        }
    }
}

fn location(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line().max(1), e.column().max(1), e.to_string())
}

/// Re-anchors a generator parse error at the generator's position in `src`.
fn generator_error(src: &str, text: &str, e: Error) -> Error {
    match e {
        Error::Parse { column, message, .. } => {
            let quoted = format!("\"{text}\"");
            match src.find(&quoted) {
                Some(at) => {
                    let (line, col) = location(src, at + 1);
                    Error::parse(line, col + column - 1, message)
                }
                None => Error::parse(1, 1, format!("generator \"{text}\": {message}")),
            }
        }
        other => other,
    }
}

fn gens_to_ideal(src: &str, n: usize, gens: &[String]) -> Result<MonomialIdeal> {
    let monos = gens
        .iter()
        .map(|g| parse_monomial(g, n).map_err(|e| generator_error(src, g, e)))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, monos)
}

fn detect(src: &str) -> Result<InputFormat> {
    let trimmed = src.trim_start();
    if !trimmed.starts_with('{') {
        return Ok(InputFormat::Text);
    }
    let v: Value = serde_json::from_str(src).map_err(json_error)?;
    let keys = v.as_object().map(|o| o.keys().cloned().collect::<Vec<_>>()).unwrap_or_default();
    let has = |k: &str| keys.iter().any(|x| x == k);
    match (has("gens"), has("components"), has("edges")) {
        (true, false, false) => Ok(InputFormat::Ideal),
        (false, true, false) => Ok(InputFormat::Decomposition),
        (false, false, true) => Ok(InputFormat::Hypergraph),
        _ => Err(Error::parse(1, 1, "expected exactly one of the keys 'gens', 'components', 'edges'")),
    }
}

pub fn parse_input(src: &str, format: InputFormat) -> Result<Input> {
    let format = match format {
        InputFormat::Auto => detect(src)?,
        f => f,
    };
    match format {
        InputFormat::Auto => unreachable!("resolved above"),
        InputFormat::Text => Ok(Input::Ideal(parse_ideal(src.trim(), None)?)),
        InputFormat::Ideal => {
            let f: IdealFile = serde_json::from_str(src).map_err(json_error)?;
            Ok(Input::Ideal(gens_to_ideal(src, f.n, &f.gens)?))
        }
        InputFormat::Decomposition => {
            let f: DecompositionFile = serde_json::from_str(src).map_err(json_error)?;
            let comps = f
                .components
                .iter()
                .map(|c| gens_to_ideal(src, f.n, &c.gens))
                .collect::<Result<Vec<_>>>()?;
            Ok(Input::Decomposition(Decomposition::new(f.n, comps)?))
        }
        InputFormat::Hypergraph => {
            let f: HypergraphFile = serde_json::from_str(src).map_err(json_error)?;
            Ok(Input::Hypergraph(Hypergraph::from_one_based(f.n, &f.edges)?))
        }
    }
}

pub fn read_input(path: &std::path::Path, format: InputFormat) -> Result<Input> {
    let src = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_input(&src, format)
}

fn gen_strings(i: &MonomialIdeal) -> Vec<String> {
    i.generators().iter().map(|g| g.to_string()).collect()
}

pub fn ideal_to_json(i: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealFile {
        n: i.ambient(),
        gens: gen_strings(i),
    })
    .expect("plain data serializes")
}

pub fn decomposition_to_json(d: &Decomposition) -> String {
    serde_json::to_string(&DecompositionFile {
        n: d.ambient(),
        components: d
            .components()
            .iter()
            .map(|c| ComponentFile { gens: gen_strings(c.ideal()) })
            .collect(),
    })
    .expect("plain data serializes")
}

pub fn hypergraph_to_json(h: &Hypergraph) -> String {
    serde_json::to_string(&HypergraphFile {
        n: h.vertex_count(),
        edges: h.edges().iter().map(|e| e.iter().map(|i| i + 1).collect()).collect(),
    })
    .expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_detection() {
        assert!(matches!(parse_input(r#"{"n": 2, "gens": ["x1*x2"]}"#, InputFormat::Auto), Ok(Input::Ideal(_))));
        assert!(matches!(
            parse_input(r#"{"n": 2, "components": [{"gens": ["x1"]}, {"gens": ["x2"]}]}"#, InputFormat::Auto),
            Ok(Input::Decomposition(_))
        ));
        assert!(matches!(parse_input(r#"{"n": 2, "edges": [[1, 2]]}"#, InputFormat::Auto), Ok(Input::Hypergraph(_))));
        assert!(matches!(parse_input("(x1, x2^2)", InputFormat::Auto), Ok(Input::Ideal(_))));
        assert!(parse_input(r#"{"n": 2}"#, InputFormat::Auto).is_err());
    }

    #[test]
    fn forced_format_mismatch_is_a_parse_error() {
        let e = parse_input(r#"{"n": 2, "edges": [[1, 2]]}"#, InputFormat::Ideal).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }

    #[test]
    fn generator_errors_point_into_the_file() {
        let src = "{\"n\": 2,\n \"gens\": [\"x1\", \"x2^\"]}";
        match parse_input(src, InputFormat::Auto) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                // `"x2^"` starts at column 17; the missing number is after `^`
                assert_eq!(column, 18 + 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_syntax_error_location() {
        match parse_input("{\"n\": 2,\n \"gens\": [\"x1\" \"x2\"]}", InputFormat::Ideal) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trips() {
        let i = parse_ideal("(x1^2*x2, x3)", Some(4)).unwrap();
        match parse_input(&ideal_to_json(&i), InputFormat::Auto).unwrap() {
            Input::Ideal(j) => assert_eq!(i, j),
            _ => unreachable!(),
        }
        let d = Decomposition::new(3, vec![parse_ideal("(x1, x2^2)", Some(3)).unwrap(), parse_ideal("(x3^2)", Some(3)).unwrap()])
            .unwrap();
        match parse_input(&decomposition_to_json(&d), InputFormat::Auto).unwrap() {
            Input::Decomposition(e) => assert_eq!(d.ideal().unwrap(), e.ideal().unwrap()),
            _ => unreachable!(),
        }
        let h = Hypergraph::from_one_based(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        match parse_input(&hypergraph_to_json(&h), InputFormat::Auto).unwrap() {
            Input::Hypergraph(g) => assert_eq!(g, h),
            _ => unreachable!(),
        }
    }

    #[test]
    fn hypergraph_source_is_cover_ideal() {
        let input = parse_input(r#"{"n": 3, "edges": [[1, 2], [2, 3]]}"#, InputFormat::Auto).unwrap();
        assert_eq!(input.source().unwrap().ideal(), &parse_ideal("(x2, x1*x3)", Some(3)).unwrap());
    }
}
