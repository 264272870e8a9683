//! The line-oriented input format.
//!
//! ```text
//! # comments run to the end of the line
//! [quiver]
//! vertices = 1 2 3
//! arrow a = 1 -> 2
//! arrow b = 2 -> 3
//!
//! [presentation]
//! nilpotency = 2
//! zero = a b
//! equal = p1 p2, q1 q2
//! ```
//!
//! A `[definingpair]` section may replace `[presentation]`; it lists one
//! representative per rotation class as `cycle = a b | mult = 2`.

use std::fmt;

use multiserial::symmetrize::STAR_PREFIX;
use multiserial::{ArrowId, DefiningPair, Path, Presentation, Quiver, SimpleCycle};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Syntax => "syntax",
            ErrorKind::Semantic => "semantic",
        };
        write!(f, "{kind} error at line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Presentation(Presentation),
    Pair(DefiningPair),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub body: Body,
}

impl InputDocument {
    pub fn quiver(&self) -> &Quiver {
        match &self.body {
            Body::Presentation(p) => p.quiver(),
            Body::Pair(d) => d.quiver(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    pos: Pos,
}

fn syntax(pos: Pos, message: impl Into<String>) -> ParseError {
    ParseError { kind: ErrorKind::Syntax, line: pos.line, column: pos.column, message: message.into() }
}

fn semantic(pos: Pos, message: impl Into<String>) -> ParseError {
    ParseError { kind: ErrorKind::Semantic, line: pos.line, column: pos.column, message: message.into() }
}

/// Whitespace-separated tokens of `text`, whose first character sits at `pos`.
fn tokens(text: &str, pos: Pos) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, ch)) in (pos.column..).zip(text.char_indices()) {
        if ch.is_whitespace() {
            if let Some((s, c)) = start.take() {
                out.push(Tok { text: &text[s..i], pos: Pos { line: pos.line, column: c } });
            }
        } else if start.is_none() {
            start = Some((i, col));
        }
    }
    if let Some((s, c)) = start {
        out.push(Tok { text: &text[s..], pos: Pos { line: pos.line, column: c } });
    }
    out
}

/// Splits `text` at the first `sep`, returning the part after it with its position.
fn split_at_char(text: &str, pos: Pos, sep: char) -> Option<(&str, &str, Pos)> {
    let i = text.find(sep)?;
    let column = pos.column + text[..i].chars().count();
    Some((&text[..i], &text[i + sep.len_utf8()..], Pos { line: pos.line, column }))
}

fn check_name(t: Tok<'_>) -> Result<(), ParseError> {
    if t.text == "->" || t.text.contains(['=', ',', '|', '[', ']']) {
        return Err(syntax(t.pos, format!("`{}` is not a valid name", t.text)));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Quiver,
    Presentation,
    Pair,
}

#[derive(Default)]
struct PresentationDraft {
    nilpotency: Option<usize>,
    zeros: Vec<Path>,
    equal: Vec<(Path, Path)>,
}

struct Parser {
    section: Option<(Section, Pos)>,
    quiver_seen: bool,
    body: Option<(Section, Pos)>,
    quiver: Quiver,
    arrow_decls: Vec<(String, Pos)>,
    presentation: PresentationDraft,
    reps: Vec<(SimpleCycle, u32, Pos)>,
}

impl Parser {
    fn new() -> Self {
        Parser {
            section: None,
            quiver_seen: false,
            body: None,
            quiver: Quiver::new(),
            arrow_decls: Vec::new(),
            presentation: PresentationDraft::default(),
            reps: Vec::new(),
        }
    }

    fn header(&mut self, t: Tok<'_>) -> Result<(), ParseError> {
        let section = match t.text {
            "[quiver]" => Section::Quiver,
            "[presentation]" => Section::Presentation,
            "[definingpair]" => Section::Pair,
            other => return Err(syntax(t.pos, format!("unknown section `{other}`"))),
        };
        match section {
            Section::Quiver if self.quiver_seen => {
                return Err(semantic(t.pos, "duplicate [quiver] section"));
            }
            Section::Quiver if self.body.is_some() => {
                return Err(semantic(t.pos, "the [quiver] section must come first"));
            }
            Section::Quiver => self.quiver_seen = true,
            _ if !self.quiver_seen => {
                return Err(semantic(t.pos, "the [quiver] section must come first"));
            }
            _ if self.body.is_some() => {
                return Err(semantic(
                    t.pos,
                    "a document holds exactly one [presentation] or [definingpair] section",
                ));
            }
            _ => self.body = Some((section, t.pos)),
        }
        self.section = Some((section, t.pos));
        Ok(())
    }

    fn line(&mut self, raw: &str, line: usize) -> Result<(), ParseError> {
        let text = raw.split('#').next().unwrap_or("");
        let start = Pos { line, column: 1 };
        let all = tokens(text, start);
        let Some(first) = all.first().copied() else { return Ok(()) };
        if first.text.starts_with('[') {
            if all.len() > 1 {
                return Err(syntax(all[1].pos, "unexpected text after section header"));
            }
            return self.header(first);
        }
        let Some((lhs, rhs, eq)) = split_at_char(text, start, '=') else {
            return Err(syntax(first.pos, "expected `key = value`"));
        };
        let rhs_pos = Pos { line, column: eq.column + 1 };
        let keys = tokens(lhs, start);
        let Some((section, _)) = self.section else {
            return Err(syntax(first.pos, "expected a section header such as [quiver]"));
        };
        match (section, keys.iter().map(|k| k.text).collect::<Vec<_>>().as_slice()) {
            (Section::Quiver, ["vertices"]) => self.vertices(rhs, rhs_pos, eq),
            (Section::Quiver, ["arrow", _]) => self.arrow(keys[1], rhs, rhs_pos, eq),
            (Section::Presentation, ["nilpotency"]) => self.nilpotency(rhs, rhs_pos, eq),
            (Section::Presentation, ["zero"]) => {
                let p = self.path(rhs, rhs_pos, eq)?;
                self.presentation.zeros.push(p);
                Ok(())
            }
            (Section::Presentation, ["equal"]) => self.equal(rhs, rhs_pos, eq),
            (Section::Pair, ["cycle"]) => self.cycle(rhs, rhs_pos, eq),
            _ => Err(syntax(first.pos, format!("unrecognised line in this section: `{}`", lhs.trim()))),
        }
    }

    fn vertices(&mut self, rhs: &str, pos: Pos, eq: Pos) -> Result<(), ParseError> {
        let names = tokens(rhs, pos);
        if names.is_empty() {
            return Err(syntax(eq, "expected at least one vertex name"));
        }
        for t in names {
            check_name(t)?;
            self.quiver
                .add_vertex(t.text)
                .map_err(|_| semantic(t.pos, format!("duplicate vertex `{}`", t.text)))?;
        }
        Ok(())
    }

    fn arrow(&mut self, name: Tok<'_>, rhs: &str, pos: Pos, eq: Pos) -> Result<(), ParseError> {
        check_name(name)?;
        let ends = tokens(rhs, pos);
        let [src, arrow, tgt] = ends.as_slice() else {
            return Err(syntax(eq, "expected `arrow NAME = SOURCE -> TARGET`"));
        };
        if arrow.text != "->" {
            return Err(syntax(arrow.pos, "expected `->`"));
        }
        for v in [src, tgt] {
            if self.quiver.vertex(v.text).is_err() {
                return Err(semantic(v.pos, format!("unknown vertex `{}`", v.text)));
            }
        }
        self.quiver
            .add_arrow(name.text, src.text, tgt.text)
            .map_err(|_| semantic(name.pos, format!("duplicate arrow `{}`", name.text)))?;
        self.arrow_decls.push((name.text.to_string(), name.pos));
        Ok(())
    }

    fn nilpotency(&mut self, rhs: &str, pos: Pos, eq: Pos) -> Result<(), ParseError> {
        let toks = tokens(rhs, pos);
        let [n] = toks.as_slice() else {
            return Err(syntax(eq, "expected a single integer"));
        };
        if self.presentation.nilpotency.is_some() {
            return Err(semantic(n.pos, "nilpotency given twice"));
        }
        let value: usize = n
            .text
            .parse()
            .map_err(|_| syntax(n.pos, format!("`{}` is not a non-negative integer", n.text)))?;
        if value < 2 {
            return Err(semantic(n.pos, "nilpotency must be at least 2"));
        }
        self.presentation.nilpotency = Some(value);
        Ok(())
    }

    fn path(&self, rhs: &str, pos: Pos, eq: Pos) -> Result<Path, ParseError> {
        let toks = tokens(rhs, pos);
        if toks.is_empty() {
            return Err(syntax(eq, "expected a path of arrow names"));
        }
        let mut ids: Vec<ArrowId> = Vec::new();
        for t in &toks {
            let a = self
                .quiver
                .arrow_id(t.text)
                .map_err(|_| semantic(t.pos, format!("unknown arrow `{}`", t.text)))?;
            if let Some(&prev) = ids.last() {
                if self.quiver.target(prev) != self.quiver.source(a) {
                    return Err(semantic(
                        t.pos,
                        format!(
                            "`{}` ends at `{}` but `{}` starts at `{}`",
                            self.quiver.arrow_name(prev),
                            self.quiver.vertex_name(self.quiver.target(prev)),
                            t.text,
                            self.quiver.vertex_name(self.quiver.source(a)),
                        ),
                    ));
                }
            }
            ids.push(a);
        }
        Ok(self.quiver.path(&ids).expect("composability checked"))
    }

    fn equal(&mut self, rhs: &str, pos: Pos, eq: Pos) -> Result<(), ParseError> {
        let Some((left, right, comma)) = split_at_char(rhs, pos, ',') else {
            return Err(syntax(eq, "expected `equal = PATH, PATH`"));
        };
        let p = self.path(left, pos, eq)?;
        let q = self.path(right, Pos { line: pos.line, column: comma.column + 1 }, comma)?;
        self.presentation.equal.push((p, q));
        Ok(())
    }

    fn cycle(&mut self, rhs: &str, pos: Pos, eq: Pos) -> Result<(), ParseError> {
        let Some((path_text, mult_text, bar)) = split_at_char(rhs, pos, '|') else {
            return Err(syntax(eq, "expected `cycle = ARROWS | mult = M`"));
        };
        let path = self.path(path_text, pos, eq)?;
        let cycle_pos = tokens(path_text, pos)[0].pos;
        let after_bar = Pos { line: pos.line, column: bar.column + 1 };
        let mult_toks = tokens(mult_text, after_bar);
        let m = match mult_toks.as_slice() {
            [k, e, m] if k.text == "mult" && e.text == "=" => *m,
            _ => return Err(syntax(bar, "expected `| mult = M` after the cycle")),
        };
        let mult: u32 = m
            .text
            .parse()
            .map_err(|_| syntax(m.pos, format!("`{}` is not a non-negative integer", m.text)))?;
        if mult == 0 {
            return Err(semantic(m.pos, "multiplicity must be positive"));
        }
        let cycle = self
            .quiver
            .simple_cycle(path)
            .map_err(|e| semantic(cycle_pos, e.to_string()))?;
        for (prev, prev_mult, _) in &self.reps {
            if cycle.is_rotation_of(prev) && mult != *prev_mult {
                return Err(semantic(
                    m.pos,
                    format!(
                        "D2 conflict: ({}) has multiplicity {mult} but its rotation ({}) has {prev_mult}",
                        self.quiver.format_path(cycle.path()),
                        self.quiver.format_path(prev.path()),
                    ),
                ));
            }
        }
        self.reps.push((cycle, mult, cycle_pos));
        Ok(())
    }

    fn finish(self, last_line: usize) -> Result<InputDocument, ParseError> {
        let end = Pos { line: last_line.max(1), column: 1 };
        if !self.quiver_seen {
            return Err(semantic(end, "missing [quiver] section"));
        }
        let Some((section, header)) = self.body else {
            return Err(semantic(end, "expected a [presentation] or [definingpair] section"));
        };
        match section {
            Section::Presentation => {
                if let Some((name, pos)) = self.arrow_decls.iter().find(|(n, _)| n.starts_with(STAR_PREFIX)) {
                    return Err(semantic(
                        *pos,
                        format!("arrow name `{name}` uses the reserved prefix `{STAR_PREFIX}`"),
                    ));
                }
                let n = self
                    .presentation
                    .nilpotency
                    .ok_or_else(|| semantic(header, "missing `nilpotency = N`"))?;
                let PresentationDraft { zeros, equal, .. } = self.presentation;
                Presentation::new(self.quiver, zeros, equal, n)
                    .map(|p| InputDocument { body: Body::Presentation(p) })
                    .map_err(|e| semantic(header, e.to_string()))
            }
            Section::Pair => {
                let reps: Vec<(SimpleCycle, u32)> = self.reps.into_iter().map(|(c, m, _)| (c, m)).collect();
                DefiningPair::close_under_rotation(self.quiver, reps)
                    .map(|d| InputDocument { body: Body::Pair(d) })
                    .map_err(|e| semantic(header, e.to_string()))
            }
            Section::Quiver => unreachable!("body sections exclude [quiver]"),
        }
    }
}

pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
    let mut parser = Parser::new();
    let mut last = 0;
    for (i, line) in text.lines().enumerate() {
        parser.line(line, i + 1)?;
        last = i + 1;
    }
    parser.finish(last)
}

fn render_quiver(out: &mut String, q: &Quiver) {
    out.push_str("[quiver]\n");
    if q.vertex_count() > 0 {
        out.push_str(&format!("vertices = {}\n", q.vertex_names().join(" ")));
    }
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {} = {} -> {}\n",
            a.name,
            q.vertex_name(a.source),
            q.vertex_name(a.target)
        ));
    }
}

/// A pair file listing one representative per rotation class.
pub fn render_pair(pair: &DefiningPair) -> String {
    let q = pair.quiver();
    let mut out = String::new();
    render_quiver(&mut out, q);
    out.push_str("\n[definingpair]\n");
    for (c, m) in pair.representatives() {
        out.push_str(&format!("cycle = {} | mult = {m}\n", q.format_path(c.path())));
    }
    out
}

pub fn render_presentation(p: &Presentation) -> String {
    let q = p.quiver();
    let mut out = String::new();
    render_quiver(&mut out, q);
    out.push_str(&format!("\n[presentation]\nnilpotency = {}\n", p.nilpotency()));
    for z in p.zero_paths() {
        out.push_str(&format!("zero = {}\n", q.format_path(z)));
    }
    for (l, r) in p.equal_pairs() {
        out.push_str(&format!("equal = {}, {}\n", q.format_path(l), q.format_path(r)));
    }
    out
}
