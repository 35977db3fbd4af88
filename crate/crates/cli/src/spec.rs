//! JSON description of a transformation.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use iet::{Alphabet, Error, Iet, QuadNum};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IetSpecFile {
    pub d: i64,
    pub alphabet: Vec<String>,
    pub order2: Vec<String>,
    pub origin: String,
    pub lengths: IndexMap<String, String>,
}

#[derive(Debug)]
pub enum SpecError {
    /// Malformed JSON, with 1-based position.
    Json { line: usize, column: usize, message: String },
    /// A field that parsed as JSON but not as a value.
    Field { field: String, source: Error },
    Iet(Error),
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpecError::Json { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            SpecError::Field { field, source } => write!(f, "{field}: {source}"),
            SpecError::Iet(e) => write!(f, "{e}"),
        }
    }
}

fn single_char(field: &str, s: &str) -> Result<char, SpecError> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(SpecError::Field {
            field: field.into(),
            source: Error::Parse { column: 1, message: format!("letter `{s}` must be a single character") },
        }),
    }
}

impl IetSpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        serde_json::from_str(text).map_err(|e| SpecError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_iet(&self) -> Result<Iet, SpecError> {
        let names = self
            .alphabet
            .iter()
            .map(|s| single_char("alphabet", s))
            .collect::<Result<Vec<char>, _>>()?;
        let alphabet = Alphabet::new(names.iter().copied()).map_err(SpecError::Iet)?;
        let order2 = self
            .order2
            .iter()
            .map(|s| {
                let c = single_char("order2", s)?;
                alphabet
                    .letter(c)
                    .ok_or_else(|| SpecError::Iet(Error::AlphabetMismatch(format!("order2 letter `{c}` is not in the alphabet"))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let value = |field: String, text: &str| {
            QuadNum::parse_in(text, self.d).map_err(|source| SpecError::Field { field, source })
        };
        let origin = value("origin".into(), &self.origin)?;
        if let Some(extra) = self.lengths.keys().find(|k| k.chars().count() != 1 || !names.contains(&k.chars().next().unwrap())) {
            return Err(SpecError::Iet(Error::AlphabetMismatch(format!("length given for unknown letter `{extra}`"))));
        }
        let lengths = names
            .iter()
            .map(|c| {
                let text = self
                    .lengths
                    .get(c.to_string().as_str())
                    .ok_or_else(|| SpecError::Iet(Error::AlphabetMismatch(format!("no length for letter `{c}`"))))?;
                value(format!("lengths.{c}"), text)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Iet::new(alphabet, order2, lengths, origin).map_err(SpecError::Iet)
    }

    /// The canonical description of `t`: top order as alphabet, values in normal form.
    pub fn from_iet(t: &Iet) -> Self {
        let al = t.alphabet();
        let name = |a: &iet::Letter| al.name(*a).to_string();
        IetSpecFile {
            d: t.d(),
            alphabet: t.top().iter().map(name).collect(),
            order2: t.bottom().iter().map(name).collect(),
            origin: t.origin().to_string(),
            lengths: t.top().iter().map(|a| (name(a), t.length(*a).to_string())).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// The running three-letter example with `α = (3 − √5)/2`.
pub const RUNNING_EXAMPLE: &str = r#"{
  "d": 5,
  "alphabet": ["a", "b", "c"],
  "order2": ["b", "c", "a"],
  "origin": "0",
  "lengths": {
    "a": "1 - 2*(3/2 - 1/2*sqrt(5))",
    "b": "3/2 - 1/2*sqrt(5)",
    "c": "3/2 - 1/2*sqrt(5)"
  }
}
"#;
