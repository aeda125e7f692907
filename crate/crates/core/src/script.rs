//! The construction-script language.
//!
//! One statement per line, `#` starts a comment:
//!
//! ```text
//! point N x y        ideal N u v        line N a b c
//! join N P Q         meet N m n         dist N X Y        angle N X Y
//! reflect N m X      rotor N a b        rotator N P alpha translator N V d
//! apply N g X        solve N A m A2 m2  project N X Y
//! midpoint N P Q     midline N m n      print N           svg path
//! ```
//!
//! Numeric arguments are literals or names of scalars. Every name is
//! assigned exactly once and must be defined before it is used; both rules
//! are checked by [`parse`].

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::io::Write;

use crate::elements::{Line, Point};
use crate::error::PgaError;
use crate::geometry::{self, Decomposition, Primitive};
use crate::isometry::{self, Motor, Versor};
use crate::metric::IdealPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verb {
    Point,
    Ideal,
    Line,
    Join,
    Meet,
    Dist,
    Angle,
    Reflect,
    Rotor,
    Rotator,
    Translator,
    Apply,
    Solve,
    Project,
    Midpoint,
    Midline,
    Print,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Num,
    Name,
    Path,
}

impl Verb {
    pub const ALL: [Verb; 18] = [
        Verb::Point,
        Verb::Ideal,
        Verb::Line,
        Verb::Join,
        Verb::Meet,
        Verb::Dist,
        Verb::Angle,
        Verb::Reflect,
        Verb::Rotor,
        Verb::Rotator,
        Verb::Translator,
        Verb::Apply,
        Verb::Solve,
        Verb::Project,
        Verb::Midpoint,
        Verb::Midline,
        Verb::Print,
        Verb::Svg,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Verb::Point => "point",
            Verb::Ideal => "ideal",
            Verb::Line => "line",
            Verb::Join => "join",
            Verb::Meet => "meet",
            Verb::Dist => "dist",
            Verb::Angle => "angle",
            Verb::Reflect => "reflect",
            Verb::Rotor => "rotor",
            Verb::Rotator => "rotator",
            Verb::Translator => "translator",
            Verb::Apply => "apply",
            Verb::Solve => "solve",
            Verb::Project => "project",
            Verb::Midpoint => "midpoint",
            Verb::Midline => "midline",
            Verb::Print => "print",
            Verb::Svg => "svg",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Verb> {
        Verb::ALL.iter().copied().find(|v| v.keyword() == s)
    }

    /// Whether the statement binds a result name.
    pub fn defines(self) -> bool {
        !matches!(self, Verb::Print | Verb::Svg)
    }

    fn slots(self) -> &'static [Slot] {
        use Slot::*;
        match self {
            Verb::Point | Verb::Ideal => &[Num, Num],
            Verb::Line => &[Num, Num, Num],
            Verb::Rotator | Verb::Translator => &[Name, Num],
            Verb::Solve => &[Name, Name, Name, Name],
            Verb::Print => &[Name],
            Verb::Svg => &[Path],
            _ => &[Name, Name],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Arg {
    Number(f64),
    Name(String),
    Path(String),
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Number(x) => write!(f, "{x}"),
            Arg::Name(s) | Arg::Path(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub verb: Verb,
    /// The bound name; `None` for `print` and `svg`.
    pub name: Option<String>,
    pub args: Vec<Arg>,
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.verb.keyword())?;
        if let Some(name) = &self.name {
            write!(f, " {name}")?;
        }
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// Parsed statements with their source line numbers.
///
/// Equality compares statements only, not line numbers.
#[derive(Debug, Clone, Default)]
pub struct Program {
    pub statements: Vec<Statement>,
    pub lines: Vec<usize>,
}

impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub token: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {} at '{}'", self.line, self.message, self.token)
    }
}

impl std::error::Error for ParseError {}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

pub fn parse(source: &str) -> Result<Program, ParseError> {
    let mut program = Program::default();
    let mut defined: HashSet<String> = HashSet::new();

    for (i, raw) in source.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let Some((&head, rest)) = tokens.split_first() else {
            continue;
        };
        let err = |token: &str, message: String| ParseError {
            line,
            token: token.to_string(),
            message,
        };

        let verb = Verb::from_keyword(head).ok_or_else(|| err(head, "unknown verb".into()))?;
        let slots = verb.slots();
        let expected = slots.len() + usize::from(verb.defines());
        if rest.len() != expected {
            let token = if rest.len() > expected { rest[expected] } else { head };
            return Err(err(
                token,
                format!("`{head}` takes {expected} arguments, got {}", rest.len()),
            ));
        }

        let (name, arg_tokens) = if verb.defines() {
            let n = rest[0];
            if !is_identifier(n) {
                return Err(err(n, "expected a name".into()));
            }
            if defined.contains(n) {
                return Err(err(n, "name is already defined".into()));
            }
            (Some(n.to_string()), &rest[1..])
        } else {
            (None, rest)
        };

        let mut args = Vec::with_capacity(slots.len());
        for (&tok, slot) in arg_tokens.iter().zip(slots) {
            let arg = match slot {
                Slot::Path => Arg::Path(tok.to_string()),
                _ if is_identifier(tok) => {
                    if !defined.contains(tok) {
                        return Err(err(tok, "undefined name".into()));
                    }
                    Arg::Name(tok.to_string())
                }
                Slot::Name => return Err(err(tok, "expected a name".into())),
                Slot::Num => match tok.parse::<f64>() {
                    Ok(x) if x.is_finite() => Arg::Number(x),
                    _ => return Err(err(tok, "expected a number".into())),
                },
            };
            args.push(arg);
        }

        if let Some(n) = &name {
            defined.insert(n.clone());
        }
        program.statements.push(Statement { verb, name, args });
        program.lines.push(line);
    }
    Ok(program)
}

/// A value bound in the environment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Point(Point),
    Line(Line),
    Motor(Motor),
    Scalar(f64),
    Decomposition(Decomposition),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Motor(_) => "motor",
            Value::Scalar(_) => "scalar",
            Value::Decomposition(_) => "decomposition",
        }
    }
}

/// Names bound so far, in definition order.
#[derive(Debug, Clone, Default)]
pub struct Environment {
    entries: Vec<(String, Value)>,
    index: HashMap<String, usize>,
}

impl Environment {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.index.get(name).map(|&i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.entries.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn insert(&mut self, name: String, value: Value) {
        self.index.insert(name.clone(), self.entries.len());
        self.entries.push((name, value));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for EvalError {}

/// Fixed six-decimal formatting with `-0` printed as `0`.
pub fn fixed(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn format_point(p: &Point, tol: f64) -> String {
    match p.normalize(tol).ok().and_then(|q| q.cartesian(tol)) {
        Some((x, y)) => format!("({}, {})", fixed(x), fixed(y)),
        None => format!("ideal ({}, {})", fixed(p.x()), fixed(p.y())),
    }
}

fn format_line(m: &Line, tol: f64) -> String {
    let n = m.normalize(tol).unwrap_or(*m);
    format!("[{}, {}, {}]", fixed(n.a()), fixed(n.b()), fixed(n.c()))
}

fn format_part(x: &crate::Multivector, tol: f64) -> String {
    if x.is_zero(tol * x.max_abs().max(1.0)) {
        return "0".into();
    }
    match (Line::from_multivector(x), Point::from_multivector(x)) {
        (Ok(m), Err(_)) => format!("[{}, {}, {}]", fixed(m.a()), fixed(m.b()), fixed(m.c())),
        (Err(_), Ok(p)) => format!("({}, {}, {})", fixed(p.x()), fixed(p.y()), fixed(p.z())),
        _ => format!("{x}"),
    }
}

/// The text `print` emits for a value (without the `name = ` prefix).
///
/// Points and lines are shown normalized; ideal points raw. Motors are
/// normalized with a nonnegative scalar. Decomposition parts are raw
/// homogeneous coordinates, so that they sum to the projected element.
pub fn format_value(v: &Value, tol: f64) -> String {
    match v {
        Value::Point(p) => format_point(p, tol),
        Value::Line(m) => format_line(m, tol),
        Value::Scalar(x) => fixed(*x),
        Value::Motor(g) => {
            let g = g.normalize().unwrap_or(*g).canonical();
            let [s, x, y, z] = g.coords();
            format!("motor({}, {}, {}, {})", fixed(s), fixed(x), fixed(y), fixed(z))
        }
        Value::Decomposition(d) => format!(
            "parallel {}, orthogonal {}",
            format_part(&d.parallel_part, tol),
            format_part(&d.orthogonal_part, tol)
        ),
    }
}

struct Evaluator<'a> {
    env: Environment,
    tol: f64,
    line: usize,
    out: &'a mut dyn Write,
}

impl Evaluator<'_> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, EvalError> {
        Err(EvalError {
            line: self.line,
            message: message.into(),
        })
    }

    fn lib<T>(&self, r: crate::Result<T>) -> Result<T, EvalError> {
        r.or_else(|e: PgaError| self.fail(e.to_string()))
    }

    fn value(&self, a: &Arg) -> Result<Value, EvalError> {
        match a {
            Arg::Name(n) => match self.env.get(n) {
                Some(v) => Ok(*v),
                None => self.fail(format!("undefined name '{n}'")),
            },
            other => self.fail(format!("expected a name, got '{other}'")),
        }
    }

    fn number(&self, a: &Arg) -> Result<f64, EvalError> {
        match a {
            Arg::Number(x) => Ok(*x),
            Arg::Name(n) => match self.value(a)? {
                Value::Scalar(x) => Ok(x),
                v => self.fail(format!("'{n}' is a {}, expected a scalar", v.kind())),
            },
            Arg::Path(p) => self.fail(format!("expected a number, got '{p}'")),
        }
    }

    fn point(&self, a: &Arg) -> Result<Point, EvalError> {
        match self.value(a)? {
            Value::Point(p) => Ok(p),
            v => self.fail(format!("'{a}' is a {}, expected a point", v.kind())),
        }
    }

    fn line(&self, a: &Arg) -> Result<Line, EvalError> {
        match self.value(a)? {
            Value::Line(m) => Ok(m),
            v => self.fail(format!("'{a}' is a {}, expected a line", v.kind())),
        }
    }

    fn motor(&self, a: &Arg) -> Result<Motor, EvalError> {
        match self.value(a)? {
            Value::Motor(g) => Ok(g),
            v => self.fail(format!("'{a}' is a {}, expected a motor", v.kind())),
        }
    }

    fn primitive(&self, a: &Arg) -> Result<Primitive, EvalError> {
        match self.value(a)? {
            Value::Point(p) => Ok(Primitive::Point(p)),
            Value::Line(m) => Ok(Primitive::Line(m)),
            v => self.fail(format!("'{a}' is a {}, expected a point or a line", v.kind())),
        }
    }

    fn write(&mut self, text: String) -> Result<(), EvalError> {
        match writeln!(self.out, "{text}") {
            Ok(()) => Ok(()),
            Err(e) => self.fail(format!("cannot write output: {e}")),
        }
    }

    fn exec(&mut self, st: &Statement) -> Result<(), EvalError> {
        let a = &st.args;
        let tol = self.tol;
        let value = match st.verb {
            Verb::Point => {
                let (x, y) = (self.number(&a[0])?, self.number(&a[1])?);
                Value::Point(Point::at(x, y))
            }
            Verb::Ideal => {
                let (u, v) = (self.number(&a[0])?, self.number(&a[1])?);
                Value::Point(self.lib(Point::new(u, v, 0.0))?)
            }
            Verb::Line => {
                let (x, y, z) = (self.number(&a[0])?, self.number(&a[1])?, self.number(&a[2])?);
                Value::Line(self.lib(Line::new(x, y, z))?)
            }
            Verb::Join => {
                let (p, q) = (self.point(&a[0])?, self.point(&a[1])?);
                match Line::from_multivector(&p.join(&q)) {
                    Ok(m) => Value::Line(m),
                    Err(_) => return self.fail("cannot join coincident points"),
                }
            }
            Verb::Meet => {
                let (m, n) = (self.line(&a[0])?, self.line(&a[1])?);
                match Point::from_multivector(&m.meet(&n)) {
                    Ok(p) => Value::Point(p),
                    Err(_) => return self.fail("cannot meet coincident lines"),
                }
            }
            Verb::Dist => {
                let (x, y) = (self.primitive(&a[0])?, self.primitive(&a[1])?);
                Value::Scalar(self.lib(geometry::distance(x, y, tol))?.value)
            }
            Verb::Angle => {
                let (x, y) = (self.primitive(&a[0])?, self.primitive(&a[1])?);
                Value::Scalar(self.lib(geometry::angle(x, y, tol))?.value)
            }
            Verb::Reflect => {
                let m = self.line(&a[0])?;
                let x = self.primitive(&a[1])?;
                let r = self.lib(isometry::reflect(&m, &x.to_multivector(), tol))?;
                match x {
                    Primitive::Point(_) => Value::Point(self.lib(Point::from_multivector(&r))?),
                    Primitive::Line(_) => Value::Line(self.lib(Line::from_multivector(&r))?),
                }
            }
            Verb::Rotor => {
                let (m, n) = (self.line(&a[0])?, self.line(&a[1])?);
                Value::Motor(self.lib(isometry::rotor_from_lines(&m, &n, tol))?)
            }
            Verb::Rotator => {
                let p = self.point(&a[0])?;
                let alpha = self.number(&a[1])?;
                Value::Motor(self.lib(isometry::rotator(&p, alpha, tol))?)
            }
            Verb::Translator => {
                let v = self.point(&a[0])?;
                let d = self.number(&a[1])?;
                let v = self.lib(IdealPoint::from_point(&v, tol))?;
                Value::Motor(self.lib(isometry::translator(&v, d))?)
            }
            Verb::Apply => {
                let g = self.motor(&a[0])?.normalize();
                let g = self.lib(g)?;
                match self.value(&a[1])? {
                    Value::Point(p) => Value::Point(self.lib(g.apply_point(&p))?),
                    Value::Line(m) => Value::Line(self.lib(g.apply_line(&m))?),
                    Value::Motor(h) => Value::Motor(Motor::from_multivector(&g.sandwich(&h.to_multivector()))),
                    v => return self.fail(format!("cannot apply a motor to a {}", v.kind())),
                }
            }
            Verb::Solve => {
                let (p, m) = (self.point(&a[0])?, self.line(&a[1])?);
                let (p2, m2) = (self.point(&a[2])?, self.line(&a[3])?);
                Value::Motor(self.lib(isometry::solve_point_line_transport(&p, &m, &p2, &m2, tol))?)
            }
            Verb::Project => {
                let (x, y) = (self.primitive(&a[0])?, self.primitive(&a[1])?);
                Value::Decomposition(self.lib(geometry::project(x, y, tol))?)
            }
            Verb::Midpoint => {
                let (p, q) = (self.point(&a[0])?, self.point(&a[1])?);
                Value::Point(self.lib(geometry::midpoint(&p, &q, tol))?)
            }
            Verb::Midline => {
                let (m, n) = (self.line(&a[0])?, self.line(&a[1])?);
                Value::Line(self.lib(geometry::midline(&m, &n, tol))?)
            }
            Verb::Print => {
                let v = self.value(&a[0])?;
                let text = format!("{} = {}", a[0], format_value(&v, tol));
                return self.write(text);
            }
            Verb::Svg => {
                let path = a[0].to_string();
                return match crate::svg::render_svg(&self.env, &path, tol) {
                    Ok(()) => Ok(()),
                    Err(e) => self.fail(e.to_string()),
                };
            }
        };
        let name = st.name.clone().expect("defining verbs carry a name");
        self.env.insert(name, value);
        Ok(())
    }
}

/// Runs `program`, writing `print` output to `out`, and returns the final
/// environment. Stops at the first failing statement.
pub fn evaluate(program: &Program, tol: f64, out: &mut dyn Write) -> Result<Environment, EvalError> {
    let mut ev = Evaluator {
        env: Environment::default(),
        tol,
        line: 0,
        out,
    };
    for (st, &line) in program.statements.iter().zip(&program.lines) {
        ev.line = line;
        ev.exec(st)?;
    }
    Ok(ev.env)
}

/// [`parse`] and [`evaluate`] into a string.
pub fn run_to_string(source: &str, tol: f64) -> Result<(Environment, String), String> {
    let program = parse(source).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    let env = evaluate(&program, tol, &mut out).map_err(|e| e.to_string())?;
    Ok((env, String::from_utf8(out).expect("output is UTF-8")))
}
