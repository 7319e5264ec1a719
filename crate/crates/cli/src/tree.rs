//! Result trees and their two renderings.
//!
//! Machine format is pretty-printed JSON. Text format flattens the tree
//! into one `path = value` line per leaf, after a `# logmod result` header:
//!
//! ```text
//! # logmod result
//! command = "analyze"
//! input.hom.matrix.0 = [1 0]
//! result.exact = true
//! ```
//!
//! Path segments are object keys or array indices. Leaves are `true`,
//! `false`, `null`, integers, JSON-quoted strings, `[]`, `{}`, or a
//! nonempty integer list in brackets. Keys are sorted, so both renderings
//! are deterministic, and [`parse_text`] inverts [`render_text`].

use std::collections::BTreeMap;

use serde_json::{Map, Number, Value};

pub const TEXT_HEADER: &str = "# logmod result";

fn is_int_list(items: &[Value]) -> bool {
    !items.is_empty() && items.iter().all(Value::is_number)
}

fn leaf(v: &Value) -> Option<String> {
    Some(match v {
        Value::Null => "null".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => Value::String(s.clone()).to_string(),
        Value::Array(a) if a.is_empty() => "[]".into(),
        Value::Array(a) if is_int_list(a) => {
            let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(" "))
        }
        Value::Object(o) if o.is_empty() => "{}".into(),
        _ => return None,
    })
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    if let Some(s) = leaf(v) {
        out.push_str(prefix);
        out.push_str(" = ");
        out.push_str(&s);
        out.push('\n');
        return;
    }
    let join = |seg: &str| {
        if prefix.is_empty() {
            seg.to_string()
        } else {
            format!("{prefix}.{seg}")
        }
    };
    match v {
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::Object(o) => {
            for (k, x) in o {
                flatten(&join(k), x, out);
            }
        }
        _ => unreachable!("scalars are leaves"),
    }
}

pub fn render_text(v: &Value) -> String {
    let mut out = format!("{TEXT_HEADER}\n");
    flatten("", v, &mut out);
    out
}

pub fn render_machine(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for TextError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn parse_number(s: &str) -> Option<Number> {
    s.parse::<i64>()
        .map(Number::from)
        .ok()
        .or_else(|| s.parse::<u64>().map(Number::from).ok())
}

fn parse_leaf(s: &str) -> Result<Value, String> {
    match s {
        "null" => return Ok(Value::Null),
        "true" => return Ok(Value::Bool(true)),
        "false" => return Ok(Value::Bool(false)),
        "[]" => return Ok(Value::Array(vec![])),
        "{}" => return Ok(Value::Object(Map::new())),
        _ => {}
    }
    if s.starts_with('"') {
        return serde_json::from_str::<String>(s)
            .map(Value::String)
            .map_err(|e| format!("bad string: {e}"));
    }
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        return inner
            .split_whitespace()
            .map(|x| {
                parse_number(x)
                    .map(Value::Number)
                    .ok_or_else(|| format!("`{x}` is not an integer"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Value::Array);
    }
    parse_number(s)
        .map(Value::Number)
        .ok_or_else(|| format!("cannot read value `{s}`"))
}

/// Intermediate tree keyed by path segment.
enum Node {
    Leaf(Value),
    Branch(BTreeMap<String, Node>),
}

fn insert(node: &mut BTreeMap<String, Node>, path: &[&str], v: Value) -> Result<(), String> {
    let (first, rest) = path.split_first().expect("nonempty path");
    if rest.is_empty() {
        if node.contains_key(*first) {
            return Err(format!("`{first}` given twice"));
        }
        node.insert(first.to_string(), Node::Leaf(v));
        return Ok(());
    }
    match node
        .entry(first.to_string())
        .or_insert_with(|| Node::Branch(BTreeMap::new()))
    {
        Node::Branch(b) => insert(b, rest, v),
        Node::Leaf(_) => Err(format!("`{first}` is both a value and a group")),
    }
}

fn build(map: BTreeMap<String, Node>) -> Result<Value, String> {
    let indexed = map.keys().all(|k| k.parse::<usize>().is_ok());
    if indexed {
        let mut items: Vec<(usize, Node)> = map
            .into_iter()
            .map(|(k, n)| (k.parse().expect("checked"), n))
            .collect();
        items.sort_by_key(|(i, _)| *i);
        let mut out = Vec::new();
        for (expected, (i, n)) in items.into_iter().enumerate() {
            if i != expected {
                return Err(format!("array index {expected} missing"));
            }
            out.push(node_value(n)?);
        }
        return Ok(Value::Array(out));
    }
    let mut out = Map::new();
    for (k, n) in map {
        out.insert(k, node_value(n)?);
    }
    Ok(Value::Object(out))
}

fn node_value(n: Node) -> Result<Value, String> {
    match n {
        Node::Leaf(v) => Ok(v),
        Node::Branch(b) => build(b),
    }
}

pub fn parse_text(text: &str) -> Result<Value, TextError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, l)) if l.trim() == TEXT_HEADER => {}
        _ => {
            return Err(TextError {
                line: 1,
                message: format!("expected `{TEXT_HEADER}`"),
            })
        }
    }
    let mut root = BTreeMap::new();
    for (i, raw) in lines {
        let line = i + 1;
        let fail = |message: String| TextError { line, message };
        if raw.trim().is_empty() {
            continue;
        }
        let (path, value) = raw
            .split_once(" = ")
            .ok_or_else(|| fail("expected `path = value`".into()))?;
        let segs: Vec<&str> = path.trim().split('.').collect();
        if segs.iter().any(|s| s.is_empty()) {
            return Err(fail(format!("bad path `{path}`")));
        }
        let v = parse_leaf(value.trim()).map_err(fail)?;
        insert(&mut root, &segs, v).map_err(fail)?;
    }
    build(root).map_err(|message| TextError { line: 0, message })
}

/// JSON if the text opens with `{`, else the text rendering.
pub fn parse_any(text: &str) -> Result<Value, TextError> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| TextError {
            line: e.line(),
            message: e.to_string(),
        })
    } else {
        parse_text(text)
    }
}
