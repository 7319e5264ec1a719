//! Input documents: a line-oriented record format.
//!
//! ```text
//! # comment
//! kind hom
//! [source]
//! rank 2
//! gen 1 0
//! gen 0 1
//! [target]
//! rank 3
//! gen 1 0 0
//! gen 0 1 0
//! gen 0 0 1
//! [matrix]
//! row 1 0
//! row 1 1
//! row 0 1
//! ```
//!
//! Each line is a key followed by whitespace-separated values. `[name]`
//! opens a section; sections may repeat. The first record must be `kind`.
//!
//! | kind     | layout                                                      |
//! |----------|-------------------------------------------------------------|
//! | `monoid` | `rank n`, then `gen` lines                                  |
//! | `ideal`  | `rank n`, then `gen` lines (the parent comes from elsewhere) |
//! | `hom`    | sections `[source]`, `[target]` (monoids), `[matrix]` rows  |
//! | `fan`    | `rank n`, then one `[cone]` section of `ray` lines per cone |
//! | `job`    | `[base]` monoid, then `[target]` + `[matrix]` pairs          |

use std::fmt;

use logmod::{AffineMonoid, Cone, Int, IntMatrix, IntVector, MonoidHom, MonoidIdeal};
use logmod::fan::Fan;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub line: usize,
    pub key: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    /// Empty for the records before the first header.
    pub name: String,
    pub line: usize,
    pub records: Vec<Record>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub kind: String,
    pub sections: Vec<Section>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut sections = vec![Section {
            name: String::new(),
            line: 0,
            records: vec![],
        }];
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix('[') {
                let Some(name) = rest.strip_suffix(']') else {
                    return err(line, "unterminated section header");
                };
                let name = name.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return err(line, format!("bad section name `{name}`"));
                }
                sections.push(Section {
                    name: name.to_string(),
                    line,
                    records: vec![],
                });
                continue;
            }
            let mut parts = content.split_whitespace();
            let key = parts.next().expect("nonempty line").to_string();
            let values = parts.map(str::to_string).collect();
            sections
                .last_mut()
                .expect("preamble section")
                .records
                .push(Record { line, key, values });
        }
        let kind = match sections[0].records.first() {
            Some(r) if r.key == "kind" && r.values.len() == 1 => r.values[0].clone(),
            Some(r) => return err(r.line, "expected `kind <name>` as the first record"),
            None => return err(1, "empty document"),
        };
        sections[0].records.remove(0);
        Ok(Self { kind, sections })
    }

    pub fn expect_kind(&self, kind: &str) -> Result<(), ParseError> {
        if self.kind != kind {
            return err(1, format!("expected a `{kind}` document, found `{}`", self.kind));
        }
        Ok(())
    }

    fn preamble(&self) -> &Section {
        &self.sections[0]
    }

    fn named(&self, name: &str) -> Vec<&Section> {
        self.sections.iter().filter(|s| s.name == name).collect()
    }

    fn single(&self, name: &str) -> Result<&Section, ParseError> {
        match self.named(name).as_slice() {
            [s] => Ok(s),
            [] => err(self.last_line(), format!("missing section [{name}]")),
            [_, s, ..] => err(s.line, format!("section [{name}] repeated")),
        }
    }

    fn last_line(&self) -> usize {
        self.sections
            .iter()
            .flat_map(|s| s.records.iter().map(|r| r.line).chain([s.line]))
            .max()
            .unwrap_or(1)
    }

    fn check_sections(&self, allowed: &[&str]) -> Result<(), ParseError> {
        for s in &self.sections[1..] {
            if !allowed.contains(&s.name.as_str()) {
                return err(s.line, format!("unexpected section [{}]", s.name));
            }
        }
        Ok(())
    }
}

pub fn parse_int(line: usize, s: &str) -> Result<Int, ParseError> {
    s.parse::<Int>()
        .or_else(|_| err(line, format!("`{s}` is not an integer")))
}

fn vector(r: &Record, len: usize) -> Result<IntVector, ParseError> {
    if r.values.len() != len {
        return err(
            r.line,
            format!("`{}` needs {len} entries, found {}", r.key, r.values.len()),
        );
    }
    r.values.iter().map(|v| parse_int(r.line, v)).collect()
}

fn rank(section: &Section, fallback_line: usize) -> Result<usize, ParseError> {
    let rs: Vec<&Record> = section.records.iter().filter(|r| r.key == "rank").collect();
    match rs.as_slice() {
        [r] if r.values.len() == 1 => r.values[0]
            .parse::<usize>()
            .or_else(|_| err(r.line, "rank must be a nonnegative integer")),
        [r] => err(r.line, "`rank` takes one value"),
        [] => err(section.line.max(fallback_line), "missing `rank`"),
        [_, r, ..] => err(r.line, "`rank` repeated"),
    }
}

fn rows(section: &Section, key: &str, len: usize) -> Result<Vec<IntVector>, ParseError> {
    let mut out = Vec::new();
    for r in &section.records {
        if r.key == key {
            out.push(vector(r, len)?);
        } else if r.key != "rank" {
            return err(r.line, format!("unexpected key `{}`", r.key));
        }
    }
    Ok(out)
}

fn lib_err(line: usize, e: logmod::Error) -> ParseError {
    ParseError {
        line,
        message: e.to_string(),
    }
}

fn monoid_from(section: &Section) -> Result<AffineMonoid, ParseError> {
    let n = rank(section, 1)?;
    let gens = rows(section, "gen", n)?;
    AffineMonoid::new(n, &gens).map_err(|e| lib_err(section.line.max(1), e))
}

pub fn parse_monoid(text: &str) -> Result<AffineMonoid, ParseError> {
    let d = Document::parse(text)?;
    d.expect_kind("monoid")?;
    d.check_sections(&[])?;
    monoid_from(d.preamble())
}

/// Generators of an ideal document, checked against `parent`.
pub fn parse_ideal(text: &str, parent: &AffineMonoid) -> Result<MonoidIdeal, ParseError> {
    let d = Document::parse(text)?;
    d.expect_kind("ideal")?;
    d.check_sections(&[])?;
    let s = d.preamble();
    let n = rank(s, 1)?;
    if n != parent.rank() {
        return err(1, format!("ideal rank {n} differs from monoid rank {}", parent.rank()));
    }
    let gens = rows(s, "gen", n)?;
    MonoidIdeal::new(parent, &gens).map_err(|e| lib_err(1, e))
}

fn hom_from(
    source: &AffineMonoid,
    target_section: &Section,
    matrix_section: &Section,
) -> Result<MonoidHom, ParseError> {
    let target = monoid_from(target_section)?;
    let m = rows(matrix_section, "row", source.rank())?;
    if m.len() != target.rank() {
        return err(
            matrix_section.line,
            format!("matrix needs {} rows, found {}", target.rank(), m.len()),
        );
    }
    let matrix = IntMatrix::from_rows(source.rank(), &m).map_err(|e| lib_err(matrix_section.line, e))?;
    MonoidHom::new(source, &target, &matrix).map_err(|e| lib_err(matrix_section.line, e))
}

pub fn parse_hom(text: &str) -> Result<MonoidHom, ParseError> {
    let d = Document::parse(text)?;
    d.expect_kind("hom")?;
    d.check_sections(&["source", "target", "matrix"])?;
    let source = monoid_from(d.single("source")?)?;
    hom_from(&source, d.single("target")?, d.single("matrix")?)
}

pub fn parse_fan(text: &str) -> Result<Fan, ParseError> {
    let d = Document::parse(text)?;
    d.expect_kind("fan")?;
    d.check_sections(&["cone"])?;
    let n = rank(d.preamble(), 1)?;
    let mut cones = Vec::new();
    for s in d.named("cone") {
        let rays = rows(s, "ray", n)?;
        cones.push(Cone::from_generators(n, &rays).map_err(|e| lib_err(s.line, e))?);
    }
    if cones.is_empty() {
        return err(d.last_line(), "a fan needs at least one [cone]");
    }
    Fan::new(n, cones).map_err(|e| lib_err(1, e))
}

/// Base monoid and the homomorphisms out of it.
pub fn parse_job(text: &str) -> Result<(AffineMonoid, Vec<MonoidHom>), ParseError> {
    let d = Document::parse(text)?;
    d.expect_kind("job")?;
    d.check_sections(&["base", "target", "matrix"])?;
    let base = monoid_from(d.single("base")?)?;
    let rest: Vec<&Section> = d.sections[1..].iter().filter(|s| s.name != "base").collect();
    if rest.is_empty() {
        return err(d.last_line(), "a job needs at least one [target] + [matrix] pair");
    }
    let mut homs = Vec::new();
    for pair in rest.chunks(2) {
        match pair {
            [t, m] if t.name == "target" && m.name == "matrix" => homs.push(hom_from(&base, t, m)?),
            [s, ..] => return err(s.line, "expected a [target] section followed by [matrix]"),
            [] => unreachable!(),
        }
    }
    Ok((base, homs))
}

fn line_of(key: &str, v: &[Int]) -> String {
    let mut s = key.to_string();
    for x in v {
        s.push(' ');
        s.push_str(&x.to_string());
    }
    s.push('\n');
    s
}

fn monoid_body(m: &AffineMonoid) -> String {
    let mut s = format!("rank {}\n", m.rank());
    for g in m.gens() {
        s.push_str(&line_of("gen", g));
    }
    s
}

pub fn emit_monoid(m: &AffineMonoid) -> String {
    format!("kind monoid\n{}", monoid_body(m))
}

pub fn emit_ideal(k: &MonoidIdeal) -> String {
    let mut s = format!("kind ideal\nrank {}\n", k.parent().rank());
    for g in k.gens() {
        s.push_str(&line_of("gen", g));
    }
    s
}

fn matrix_body(m: &IntMatrix) -> String {
    (0..m.rows()).map(|i| line_of("row", m.row(i))).collect()
}

pub fn emit_hom(h: &MonoidHom) -> String {
    format!(
        "kind hom\n[source]\n{}[target]\n{}[matrix]\n{}",
        monoid_body(h.source()),
        monoid_body(h.target()),
        matrix_body(h.matrix())
    )
}

pub fn emit_fan(f: &Fan) -> String {
    let mut s = format!("kind fan\nrank {}\n", f.ambient_rank());
    for c in f.max_cones() {
        s.push_str("[cone]\n");
        for r in c.rays() {
            s.push_str(&line_of("ray", &r));
        }
    }
    s
}

pub fn emit_job(base: &AffineMonoid, homs: &[MonoidHom]) -> String {
    let mut s = format!("kind job\n[base]\n{}", monoid_body(base));
    for h in homs {
        s.push_str(&format!(
            "[target]\n{}[matrix]\n{}",
            monoid_body(h.target()),
            matrix_body(h.matrix())
        ));
    }
    s
}
