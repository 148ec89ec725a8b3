//! Loader for family specification files.
//!
//! Line-oriented format; `#` starts a comment, blank lines are ignored:
//!
//! ```text
//! [family] kind=cycle size="2*n+5"
//! [vertex x] terms=["n"] threshold=0
//! [vertex y] terms=["n+1"]
//! ```
//!
//! Parametric kinds (`path`, `cycle`, `complete`, `star`) take `size=` with
//! one polynomial or a list of them (the cycle), plus optional `threshold=`
//! and `prefix=[..]` holding explicit small-index sizes. `kind=constant`
//! takes `graph="file.g"`; `kind=explicit` takes `cycle=["b.g","c.g"]` and
//! optional `prefix=["a.g"]`, with graph files in the plain `p q` text
//! format resolved relative to the family file. `kind=infinite_path` takes
//! nothing. Every `[vertex NAME]` section defines a named selector with the
//! same `terms`/`threshold`/`prefix` attributes; all selectors are
//! validated against the family eagerly.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::rc::Rc;

use num_bigint::BigInt;

use nsgraph_core::family::{FamilyError, GraphFamily, VertexSelector};
use nsgraph_core::graph::FiniteGraph;
use nsgraph_core::upalg::{Poly, UppSeq};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {msg}")]
    Line {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    #[error("selector '{name}': {source}")]
    Selector { name: String, source: FamilyError },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug)]
pub struct LoadedFamily {
    pub family: Rc<GraphFamily>,
    pub selectors: BTreeMap<String, VertexSelector>,
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Text(String),
    Nat(u64),
    TextList(Vec<String>),
    NatList(Vec<u64>),
}

struct Section {
    line: usize,
    header: Vec<String>,
    attrs: Vec<(String, Value)>,
}

pub fn load_family(path: &Path) -> Result<LoadedFamily, LoadError> {
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let fail = |line: usize, msg: String| LoadError::Line {
        path: path.to_path_buf(),
        line,
        msg,
    };

    let mut sections = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        sections.push(parse_section(line).map_err(|msg| fail(line_no, msg)).map(
            |(header, attrs)| Section {
                line: line_no,
                header,
                attrs,
            },
        )?);
    }

    let Some(family_section) = sections.first() else {
        return Err(fail(1, "missing [family] section".into()));
    };
    if family_section.header != ["family"] {
        return Err(fail(
            family_section.line,
            "the first section must be [family]".into(),
        ));
    }

    let family = Rc::new(build_family(family_section, base, path)?);

    let mut selectors = BTreeMap::new();
    for section in &sections[1..] {
        let [kw, name] = section.header.as_slice() else {
            return Err(fail(
                section.line,
                "expected a [vertex NAME] section".into(),
            ));
        };
        if kw != "vertex" {
            return Err(fail(section.line, format!("unknown section [{kw} ...]")));
        }
        let seq = sequence_from_attrs(section, "terms", path)?;
        let selector =
            VertexSelector::new(seq).map_err(|source| LoadError::Selector {
                name: name.clone(),
                source,
            })?;
        family
            .validate_selector(&selector)
            .map_err(|source| LoadError::Selector {
                name: name.clone(),
                source,
            })?;
        if selectors.insert(name.clone(), selector).is_some() {
            return Err(fail(section.line, format!("duplicate selector '{name}'")));
        }
    }

    Ok(LoadedFamily { family, selectors })
}

fn build_family(
    section: &Section,
    base: &Path,
    file: &Path,
) -> Result<GraphFamily, LoadError> {
    let fail = |msg: String| LoadError::Line {
        path: file.to_path_buf(),
        line: section.line,
        msg,
    };
    let kind = match attr(section, "kind") {
        Some(Value::Text(k)) => k.clone(),
        _ => return Err(fail("the [family] section needs kind=\"...\"".into())),
    };
    let known_keys: &[&str] = match kind.as_str() {
        "path" | "cycle" | "complete" | "star" => &["kind", "size", "threshold", "prefix"],
        "constant" => &["kind", "graph"],
        "explicit" => &["kind", "prefix", "cycle"],
        "infinite_path" => &["kind"],
        other => return Err(fail(format!("unknown family kind '{other}'"))),
    };
    for (key, _) in &section.attrs {
        if !known_keys.contains(&key.as_str()) {
            return Err(fail(format!("unknown attribute '{key}' for kind={kind}")));
        }
    }
    let family = match kind.as_str() {
        "path" | "cycle" | "complete" | "star" => {
            let size = sequence_from_attrs(section, "size", file)?;
            match kind.as_str() {
                "path" => GraphFamily::path_family(size)?,
                "cycle" => GraphFamily::cycle_family(size)?,
                "complete" => GraphFamily::complete_family(size)?,
                _ => GraphFamily::star_family(size)?,
            }
        }
        "constant" => {
            let Some(Value::Text(name)) = attr(section, "graph") else {
                return Err(fail("kind=constant needs graph=\"file\"".into()));
            };
            GraphFamily::Constant(load_graph(base, name, file, section.line)?)
        }
        "explicit" => {
            let prefix = match attr(section, "prefix") {
                Some(Value::TextList(names)) => names.clone(),
                None => Vec::new(),
                _ => return Err(fail("prefix must be a list of graph files".into())),
            };
            let cycle = match attr(section, "cycle") {
                Some(Value::TextList(names)) => names.clone(),
                _ => return Err(fail("kind=explicit needs cycle=[\"file\", ...]".into())),
            };
            let load_all = |names: &[String]| -> Result<Vec<FiniteGraph>, LoadError> {
                names
                    .iter()
                    .map(|n| load_graph(base, n, file, section.line))
                    .collect()
            };
            GraphFamily::explicit_periodic(load_all(&prefix)?, load_all(&cycle)?)?
        }
        _ => GraphFamily::InfinitePath,
    };
    Ok(family)
}

fn load_graph(
    base: &Path,
    name: &str,
    file: &Path,
    line: usize,
) -> Result<FiniteGraph, LoadError> {
    let path = base.join(name);
    let text = fs::read_to_string(&path).map_err(|source| LoadError::Io {
        path: path.clone(),
        source,
    })?;
    FiniteGraph::parse_text(&text).map_err(|e| LoadError::Line {
        path: file.to_path_buf(),
        line,
        msg: format!("graph file {}: {e}", path.display()),
    })
}

/// Builds the ultimately periodic sequence described by `key=`/
/// `threshold=`/`prefix=` attributes of a section.
fn sequence_from_attrs(
    section: &Section,
    key: &str,
    file: &Path,
) -> Result<UppSeq, LoadError> {
    let fail = |msg: String| LoadError::Line {
        path: file.to_path_buf(),
        line: section.line,
        msg,
    };
    let texts: Vec<String> = match attr(section, key) {
        Some(Value::Text(t)) => vec![t.clone()],
        Some(Value::TextList(ts)) if !ts.is_empty() => ts.clone(),
        _ => return Err(fail(format!("missing {key}=\"polynomial\" (or a list)"))),
    };
    let cycle = texts
        .iter()
        .map(|t| Poly::parse(t).map_err(|e| fail(format!("in '{t}': {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let threshold = match attr(section, "threshold") {
        Some(Value::Nat(t)) => *t,
        None => 0,
        _ => return Err(fail("threshold must be a natural number".into())),
    };
    let prefix: Vec<BigInt> = match attr(section, "prefix") {
        Some(Value::NatList(vs)) => vs.iter().map(|&v| BigInt::from(v)).collect(),
        None => Vec::new(),
        _ => return Err(fail("prefix must be a list of naturals".into())),
    };
    UppSeq::new(threshold, cycle, prefix).map_err(|e| fail(format!("{e}")))
}

fn attr<'a>(section: &'a Section, key: &str) -> Option<&'a Value> {
    section
        .attrs
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v)
}

type Attrs = Vec<(String, Value)>;

/// One line: `[word word?] key=value ...`
fn parse_section(line: &str) -> Result<(Vec<String>, Attrs), String> {
    let mut scanner = LineScanner {
        bytes: line.as_bytes(),
        pos: 0,
    };
    scanner.skip_ws();
    if !scanner.eat(b'[') {
        return Err("expected a [section] header".into());
    }
    let mut header = Vec::new();
    loop {
        scanner.skip_ws();
        if scanner.eat(b']') {
            break;
        }
        header.push(scanner.word()?);
    }
    if header.is_empty() {
        return Err("empty section header".into());
    }
    let mut attrs = Vec::new();
    loop {
        scanner.skip_ws();
        if scanner.at_end() {
            break;
        }
        let key = scanner.word()?;
        scanner.skip_ws();
        if !scanner.eat(b'=') {
            return Err(format!("expected '=' after '{key}'"));
        }
        scanner.skip_ws();
        let value = scanner.value()?;
        attrs.push((key, value));
    }
    Ok((header, attrs))
}

struct LineScanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl LineScanner<'_> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> Result<String, String> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err("expected a word".into());
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn quoted(&mut self) -> Result<String, String> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|&b| b != b'"') {
            self.pos += 1;
        }
        if !self.eat(b'"') {
            return Err("unterminated string".into());
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos - 1]).into_owned())
    }

    fn nat(&mut self) -> Result<u64, String> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| "expected a natural number".to_string())
    }

    fn value(&mut self) -> Result<Value, String> {
        if self.eat(b'"') {
            return Ok(Value::Text(self.quoted()?));
        }
        if self.eat(b'[') {
            self.skip_ws();
            if self.eat(b']') {
                return Ok(Value::NatList(Vec::new()));
            }
            if self.eat(b'"') {
                let mut items = vec![self.quoted()?];
                loop {
                    self.skip_ws();
                    if self.eat(b']') {
                        return Ok(Value::TextList(items));
                    }
                    if !self.eat(b',') {
                        return Err("expected ',' or ']' in list".into());
                    }
                    self.skip_ws();
                    if !self.eat(b'"') {
                        return Err("expected a quoted string".into());
                    }
                    items.push(self.quoted()?);
                }
            }
            let mut items = vec![self.nat()?];
            loop {
                self.skip_ws();
                if self.eat(b']') {
                    return Ok(Value::NatList(items));
                }
                if !self.eat(b',') {
                    return Err("expected ',' or ']' in list".into());
                }
                self.skip_ws();
                items.push(self.nat()?);
            }
        }
        if self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Ok(Value::Nat(self.nat()?));
        }
        // bare word, e.g. kind=cycle
        Ok(Value::Text(self.word()?))
    }
}
