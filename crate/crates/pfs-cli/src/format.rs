//! The line-oriented text formats: `pfs 1` files for positive
//! hypergraphs and `computad 1` files for computad presentations.
//! Both serializers produce parse-stable, byte-deterministic output.

use std::collections::BTreeMap;

use pfs_core::computad::{Computad, Indet, LabeledCell};
use pfs_core::{validate, PositiveHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown face `{name}`")]
    UnknownFace { line: usize, name: String },
    #[error("line {line}: `{name}` is declared twice")]
    DuplicateDeclaration { line: usize, name: String },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Face and indet names: word characters only, so generated names (which
/// carry a `$`) can never collide with parsed ones.
fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Numbered, comment-stripped, non-blank lines (1-based numbering).
fn logical_lines(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| (i + 1, body.to_string()))
        })
        .collect()
}

struct PfsParser {
    levels: Vec<Vec<String>>,
    gamma: Vec<(String, String)>,
    delta: Vec<(String, Vec<String>)>,
    dims: BTreeMap<String, usize>,
    declared: BTreeMap<String, usize>,
}

impl PfsParser {
    fn new() -> Self {
        PfsParser {
            levels: Vec::new(),
            gamma: Vec::new(),
            delta: Vec::new(),
            dims: BTreeMap::new(),
            declared: BTreeMap::new(),
        }
    }

    fn dim_line(&mut self, no: usize, head: &str, rest: &str) -> Result<(), FormatError> {
        let k: usize = head
            .strip_prefix("dim")
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| syntax(no, format!("expected `dimK:`, got `{head}:`")))?;
        if k != self.levels.len() {
            return Err(syntax(
                no,
                format!("dimension lines must ascend from 0; expected dim{}", self.levels.len()),
            ));
        }
        let mut names = Vec::new();
        for name in rest.split_whitespace() {
            if !valid_name(name) {
                return Err(syntax(no, format!("invalid face name `{name}`")));
            }
            if self.dims.insert(name.to_string(), k).is_some() {
                return Err(FormatError::DuplicateDeclaration { line: no, name: name.into() });
            }
            names.push(name.to_string());
        }
        if names.is_empty() {
            return Err(syntax(no, format!("dim{k} declares no faces")));
        }
        self.levels.push(names);
        Ok(())
    }

    fn face_line(&mut self, no: usize, name: &str, rest: &str) -> Result<(), FormatError> {
        let dim = *self
            .dims
            .get(name)
            .ok_or_else(|| FormatError::UnknownFace { line: no, name: name.into() })?;
        if dim == 0 {
            return Err(syntax(no, format!("`{name}` has dimension 0 and takes no γ/δ line")));
        }
        if self.declared.insert(name.to_string(), no).is_some() {
            return Err(FormatError::DuplicateDeclaration { line: no, name: name.into() });
        }
        let (delta_part, gamma_part) = rest
            .split_once(';')
            .ok_or_else(|| syntax(no, "expected `delta = ... ; gamma = ...`"))?;
        let deltas = delta_part
            .trim()
            .strip_prefix("delta")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .ok_or_else(|| syntax(no, "expected `delta = ...` before `;`"))?;
        let gamma = gamma_part
            .trim()
            .strip_prefix("gamma")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .map(str::trim)
            .ok_or_else(|| syntax(no, "expected `gamma = ...` after `;`"))?;
        let mut delta_names = Vec::new();
        for d in deltas.split(',') {
            let d = d.trim();
            if d.is_empty() {
                return Err(syntax(no, "delta list must be nonempty"));
            }
            if self.dims.get(d) != Some(&(dim - 1)) {
                return Err(FormatError::UnknownFace { line: no, name: d.into() });
            }
            delta_names.push(d.to_string());
        }
        if self.dims.get(gamma) != Some(&(dim - 1)) {
            return Err(FormatError::UnknownFace { line: no, name: gamma.into() });
        }
        self.delta.push((name.to_string(), delta_names));
        self.gamma.push((name.to_string(), gamma.to_string()));
        Ok(())
    }

    fn finish(self, last_line: usize) -> Result<PositiveHypergraph, FormatError> {
        for (name, &dim) in &self.dims {
            if dim >= 1 && !self.declared.contains_key(name) {
                return Err(syntax(last_line, format!("face `{name}` has no γ/δ line")));
            }
        }
        PositiveHypergraph::build(self.levels, self.gamma, self.delta)
            .map_err(|errs| syntax(last_line, format!("malformed tables: {errs:?}")))
    }
}

/// Parses the body of a `pfs 1` block (header already consumed).
fn parse_pfs_lines(lines: &[(usize, String)]) -> Result<PositiveHypergraph, FormatError> {
    let mut p = PfsParser::new();
    let mut last = 0;
    for (no, line) in lines {
        last = *no;
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(*no, "expected `dimK: ...` or `name: ...`"))?;
        let head = head.trim();
        if head.len() > 3 && head.starts_with("dim") && head[3..].chars().all(|c| c.is_ascii_digit()) {
            p.dim_line(*no, head, rest)?;
        } else {
            p.face_line(*no, head, rest)?;
        }
    }
    p.finish(last)
}

pub fn parse_pfs(text: &str) -> Result<PositiveHypergraph, FormatError> {
    let lines = logical_lines(text);
    let Some(((first_no, header), body)) = lines.split_first() else {
        return Err(syntax(1, "empty file"));
    };
    if header.split_whitespace().collect::<Vec<_>>() != ["pfs", "1"] {
        return Err(syntax(*first_no, "expected header `pfs 1`"));
    }
    parse_pfs_lines(body)
}

pub fn write_pfs(h: &PositiveHypergraph) -> String {
    let mut out = String::from("pfs 1\n");
    let dim = h.dim().expect("nonempty hypergraph");
    for k in 0..=dim {
        let names: Vec<&str> = h.level(k).iter().map(String::as_str).collect();
        out.push_str(&format!("dim{k}: {}\n", names.join(" ")));
    }
    for k in 1..=dim {
        for f in h.level(k) {
            let deltas: Vec<&str> = h.delta(f).unwrap().iter().map(String::as_str).collect();
            out.push_str(&format!(
                "{f}: delta = {} ; gamma = {}\n",
                deltas.join(","),
                h.gamma(f).unwrap()
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------
// Computad presentations.
// ---------------------------------------------------------------------

pub fn parse_computad(text: &str) -> Result<Computad, FormatError> {
    let lines = logical_lines(text);
    let Some(((first_no, header), body)) = lines.split_first() else {
        return Err(syntax(1, "empty file"));
    };
    if header.split_whitespace().collect::<Vec<_>>() != ["computad", "1"] {
        return Err(syntax(*first_no, "expected header `computad 1`"));
    }
    let mut indets: BTreeMap<String, Indet> = BTreeMap::new();
    let mut dims: BTreeMap<String, usize> = BTreeMap::new();
    let mut next_dim = 0usize;
    let mut i = 0;
    while i < body.len() {
        let (no, line) = &body[i];
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(*no, "expected `dimK: ...` or `name: ...`"))?;
        let head = head.trim();
        if head.len() > 3 && head.starts_with("dim") && head[3..].chars().all(|c| c.is_ascii_digit()) {
            let k: usize = head[3..].parse().unwrap();
            if k != next_dim {
                return Err(syntax(*no, format!("dimension lines must ascend; expected dim{next_dim}")));
            }
            next_dim += 1;
            for name in rest.split_whitespace() {
                if !valid_name(name) {
                    return Err(syntax(*no, format!("invalid indet name `{name}`")));
                }
                if dims.insert(name.to_string(), k).is_some() {
                    return Err(FormatError::DuplicateDeclaration { line: *no, name: name.into() });
                }
                if k == 0 {
                    indets.insert(
                        name.to_string(),
                        Indet { name: name.to_string(), dim: 0, cod: None, dom: None },
                    );
                }
            }
            i += 1;
            continue;
        }
        // `x: cod = y ; dom = begin` followed by an inline cell block.
        let dim = *dims
            .get(head)
            .ok_or_else(|| FormatError::UnknownFace { line: *no, name: head.into() })?;
        if dim == 0 {
            return Err(syntax(*no, format!("`{head}` has dimension 0 and takes no cod/dom line")));
        }
        if indets.contains_key(head) {
            return Err(FormatError::DuplicateDeclaration { line: *no, name: head.into() });
        }
        let (cod_part, dom_part) = rest
            .split_once(';')
            .ok_or_else(|| syntax(*no, "expected `cod = ... ; dom = begin`"))?;
        let cod = cod_part
            .trim()
            .strip_prefix("cod")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .map(str::trim)
            .ok_or_else(|| syntax(*no, "expected `cod = ...`"))?;
        if dims.get(cod) != Some(&(dim - 1)) {
            return Err(FormatError::UnknownFace { line: *no, name: cod.into() });
        }
        let dom_kw = dom_part
            .trim()
            .strip_prefix("dom")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .map(str::trim)
            .ok_or_else(|| syntax(*no, "expected `dom = begin`"))?;
        if dom_kw != "begin" {
            return Err(syntax(*no, "expected `dom = begin` introducing an inline cell"));
        }
        // Collect the block up to `end`.
        let mut j = i + 1;
        let mut shape_lines: Vec<(usize, String)> = Vec::new();
        let mut label_lines: Vec<(usize, String)> = Vec::new();
        let mut saw_header = false;
        let mut closed = false;
        while j < body.len() {
            let (bno, bline) = &body[j];
            j += 1;
            if bline == "end" {
                closed = true;
                break;
            }
            if !saw_header {
                if bline.split_whitespace().collect::<Vec<_>>() != ["pfs", "1"] {
                    return Err(syntax(*bno, "inline cell must start with `pfs 1`"));
                }
                saw_header = true;
            } else if let Some(rest) = bline.strip_prefix("labels:") {
                label_lines.push((*bno, rest.to_string()));
            } else {
                shape_lines.push((*bno, bline.clone()));
            }
        }
        if !closed {
            return Err(syntax(*no, "inline cell block is missing its `end`"));
        }
        let shape_h = parse_pfs_lines(&shape_lines)?;
        let shape = validate(&shape_h)
            .map_err(|_| syntax(*no, format!("inline domain cell of `{head}` violates the axioms")))?;
        let mut labels = BTreeMap::new();
        for (lno, llist) in &label_lines {
            for pair in llist.split(',') {
                let (face, indet) = pair
                    .split_once("->")
                    .ok_or_else(|| syntax(*lno, "labels are `face -> indet` pairs"))?;
                let (face, indet) = (face.trim(), indet.trim());
                if !shape.hypergraph().contains(face) {
                    return Err(FormatError::UnknownFace { line: *lno, name: face.into() });
                }
                if !dims.contains_key(indet) {
                    return Err(FormatError::UnknownFace { line: *lno, name: indet.into() });
                }
                if labels.insert(face.to_string(), indet.to_string()).is_some() {
                    return Err(FormatError::DuplicateDeclaration { line: *lno, name: face.into() });
                }
            }
        }
        let dom = LabeledCell { shape, level: dim - 1, labels };
        indets.insert(
            head.to_string(),
            Indet { name: head.to_string(), dim, cod: Some(cod.to_string()), dom: Some(dom) },
        );
        i = j;
    }
    Ok(Computad { indets })
}

pub fn write_computad(p: &Computad) -> String {
    let mut out = String::from("computad 1\n");
    let max_dim = p.indets.values().map(|x| x.dim).max().unwrap_or(0);
    for k in 0..=max_dim {
        let names: Vec<&str> = p.indets_of_dim(k).map(|x| x.name.as_str()).collect();
        if !names.is_empty() {
            out.push_str(&format!("dim{k}: {}\n", names.join(" ")));
        }
    }
    for k in 1..=max_dim {
        for x in p.indets_of_dim(k) {
            let dom = x.dom.as_ref().expect("positive-dimension indets carry a domain");
            out.push_str(&format!(
                "{}: cod = {} ; dom = begin\n",
                x.name,
                x.cod.as_ref().expect("positive-dimension indets carry a codomain")
            ));
            out.push_str(&write_pfs(dom.shape.hypergraph()));
            let pairs: Vec<String> = dom
                .labels
                .iter()
                .map(|(f, l)| format!("{f} -> {l}"))
                .collect();
            out.push_str(&format!("labels: {}\nend\n", pairs.join(", ")));
        }
    }
    out
}
