//! The `tlx 1` problem-file format.
//!
//! ```text
//! tlx 1                                   # header, first non-blank line
//! params r1 r2 r3                         # parameter names
//! guard r4*r5 - r3*r6                     # must be nonzero at every assignment
//! algebra g ternary                       # or `binary` for a Leibniz algebra
//!   basis x1 x2 x3
//!   [x1,x2,x3] = x1                       # canonical index order only
//! end
//! representation R of g on V
//!   basis w1 w2
//!   rho[x1,x2](w1) = {w2: r1}
//! end
//! extension E of g by h
//!   rho[x2,x3](v2) = {v1: r1}
//!   nu[x2](v2,v3) = {v1: (r2*r3 - r1*r4)/(r4*r5 - r3*r6)}
//!   omega[x1,x2,x3] = {v1: -r3, v2: r2}
//! end
//! tasks check-3lie check-extension
//! ```
//! A value is a basis name, `0`, or a coefficient map `{name: expr, ...}`.
//! Entries not listed are zero. `#` starts a comment.

use std::collections::BTreeSet;

use crate::algebra::{LeibnizAlgebra, ThreeLieAlgebra};
use crate::error::{Error, Result};
use crate::expr::{Assignment, ParamExpr};
use crate::extension::ExtensionDatum;
use crate::linalg::{LinearMap, SpaceId};
use crate::representation::Representation;
use crate::scalar::Scalar;

/// Format version accepted by [`ProblemFile::parse`].
pub const FORMAT_HEADER: &str = "tlx 1";

/// A vector given by coefficient expressions on basis indices.
pub type LinComb = Vec<(usize, ParamExpr)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Ternary,
    Binary,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDecl {
    pub name: String,
    pub kind: AlgebraKind,
    pub basis: Vec<String>,
    /// Argument indices (three or two) and the value.
    pub entries: Vec<(Vec<usize>, LinComb)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepresentationDecl {
    pub name: String,
    /// Index of the acting algebra among the declared algebras.
    pub algebra: usize,
    pub space: String,
    pub basis: Vec<String>,
    /// `rho[x_i,x_j](w_k)` as `((i, j, k), value)`.
    pub entries: Vec<((usize, usize, usize), LinComb)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionDecl {
    pub name: String,
    pub g: usize,
    pub h: usize,
    pub rho: Vec<((usize, usize, usize), LinComb)>,
    pub nu: Vec<((usize, usize, usize), LinComb)>,
    pub omega: Vec<((usize, usize, usize), LinComb)>,
}

/// A parsed problem file; entries are still parameter expressions.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemFile {
    pub params: Vec<String>,
    pub guards: Vec<(String, ParamExpr)>,
    pub algebras: Vec<AlgebraDecl>,
    pub representations: Vec<RepresentationDecl>,
    pub extensions: Vec<ExtensionDecl>,
    pub tasks: Vec<String>,
}

/// A problem file with every entry evaluated.
#[derive(Clone, Debug)]
pub struct Instance {
    pub ternary: Vec<(String, ThreeLieAlgebra)>,
    pub binary: Vec<(String, LeibnizAlgebra)>,
    pub representations: Vec<(String, Representation)>,
    pub extensions: Vec<(String, ExtensionDatum)>,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn lookup(basis: &[String], name: &str) -> Result<usize> {
    basis.iter().position(|b| b == name).ok_or_else(|| Error::Undeclared(name.to_string()))
}

/// Splits `head[a,b,...](c,d)` style references: returns the text before
/// `[`, the bracketed list, and the optional parenthesised list.
fn split_ref(line: usize, s: &str) -> Result<(String, Vec<String>, Option<Vec<String>>)> {
    let s = s.trim();
    let open = s.find('[').ok_or_else(|| syntax(line, format!("expected `[` in `{s}`")))?;
    let close = s.find(']').ok_or_else(|| syntax(line, format!("expected `]` in `{s}`")))?;
    if close < open {
        return Err(syntax(line, format!("malformed reference `{s}`")));
    }
    let list = |t: &str| t.split(',').map(|p| p.trim().to_string()).collect::<Vec<_>>();
    let head = s[..open].trim().to_string();
    let inner = list(&s[open + 1..close]);
    let rest = s[close + 1..].trim();
    let tail = if rest.is_empty() {
        None
    } else if rest.starts_with('(') && rest.ends_with(')') {
        Some(list(&rest[1..rest.len() - 1]))
    } else {
        return Err(syntax(line, format!("unexpected `{rest}`")));
    };
    Ok((head, inner, tail))
}

struct Ctx<'a> {
    params: &'a BTreeSet<String>,
}

impl Ctx<'_> {
    fn expr(&self, line: usize, text: &str) -> Result<ParamExpr> {
        let e = ParamExpr::parse(text).map_err(|e| match e {
            Error::Parse { pos, msg } => syntax(line, format!("in expression `{text}` at column {pos}: {msg}")),
            other => other,
        })?;
        if let Some(p) = e.params().into_iter().find(|p| !self.params.contains(p)) {
            return Err(Error::Undeclared(p));
        }
        Ok(e)
    }

    /// A value: basis name, `0`, or `{name: expr, ...}`.
    fn value(&self, line: usize, text: &str, basis: &[String]) -> Result<LinComb> {
        let t = text.trim();
        if t == "0" {
            return Ok(Vec::new());
        }
        if let Some(inner) = t.strip_prefix('{') {
            let inner = inner.strip_suffix('}').ok_or_else(|| syntax(line, "unterminated `{`"))?;
            let mut out: LinComb = Vec::new();
            for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (name, e) = item.split_once(':').ok_or_else(|| syntax(line, format!("expected `name: expr`, got `{item}`")))?;
                let idx = lookup(basis, name.trim())?;
                if out.iter().any(|(i, _)| *i == idx) {
                    return Err(syntax(line, format!("coefficient of `{}` given twice", name.trim())));
                }
                out.push((idx, self.expr(line, e)?));
            }
            return Ok(out);
        }
        if is_ident(t) {
            return Ok(vec![(lookup(basis, t)?, ParamExpr::constant(Scalar::one()))]);
        }
        Err(syntax(line, format!("expected a basis name, `0` or `{{...}}`, got `{t}`")))
    }
}

fn indices(basis: &[String], names: &[String]) -> Result<Vec<usize>> {
    names.iter().map(|n| lookup(basis, n)).collect()
}

fn strictly_increasing(ix: &[usize]) -> bool {
    ix.windows(2).all(|w| w[0] < w[1])
}

fn push_unique<K: PartialEq + std::fmt::Debug>(line: usize, list: &mut Vec<(K, LinComb)>, key: K, v: LinComb) -> Result<()> {
    if list.iter().any(|(k, _)| *k == key) {
        return Err(syntax(line, "duplicate entry"));
    }
    list.push((key, v));
    Ok(())
}

enum Block {
    Algebra(AlgebraDecl),
    Representation(RepresentationDecl),
    Extension(ExtensionDecl),
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut pf = ProblemFile {
            params: Vec::new(),
            guards: Vec::new(),
            algebras: Vec::new(),
            representations: Vec::new(),
            extensions: Vec::new(),
            tasks: Vec::new(),
        };
        let mut params = BTreeSet::new();
        let mut header = false;
        let mut block: Option<(usize, Block)> = None;
        let mut names = BTreeSet::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let l = raw.split('#').next().unwrap_or("").trim();
            if l.is_empty() {
                continue;
            }
            if !header {
                if l.split_whitespace().collect::<Vec<_>>() != ["tlx", "1"] {
                    return Err(syntax(line, format!("expected header `{FORMAT_HEADER}`")));
                }
                header = true;
                continue;
            }
            let ctx = Ctx { params: &params };
            if let Some((_, b)) = block.as_mut() {
                if l == "end" {
                    let (_, b) = block.take().expect("open block");
                    match b {
                        Block::Algebra(a) => pf.algebras.push(a),
                        Block::Representation(r) => pf.representations.push(r),
                        Block::Extension(e) => pf.extensions.push(e),
                    }
                    continue;
                }
                pf.block_line(&ctx, b, line, l)?;
                continue;
            }
            let words: Vec<&str> = l.split_whitespace().collect();
            match words[0] {
                "params" => {
                    for p in l["params".len()..].split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                        if !is_ident(p) {
                            return Err(syntax(line, format!("invalid parameter name `{p}`")));
                        }
                        if !params.insert(p.to_string()) {
                            return Err(syntax(line, format!("parameter `{p}` declared twice")));
                        }
                        pf.params.push(p.to_string());
                    }
                }
                "guard" => {
                    let t = l["guard".len()..].trim();
                    let e = ctx.expr(line, t)?;
                    pf.guards.push((t.to_string(), e));
                }
                "tasks" | "task" => {
                    for t in l[words[0].len()..].split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                        if crate::run::Task::from_name(t).is_none() {
                            return Err(Error::UnknownTask(t.to_string()));
                        }
                        pf.tasks.push(t.to_string());
                    }
                }
                "algebra" => {
                    let kind = match words.get(2) {
                        Some(&"ternary") => AlgebraKind::Ternary,
                        Some(&"binary") => AlgebraKind::Binary,
                        _ => return Err(syntax(line, "expected `algebra NAME ternary|binary`")),
                    };
                    if words.len() != 3 {
                        return Err(syntax(line, "expected `algebra NAME ternary|binary`"));
                    }
                    let name = pf.new_name(&mut names, line, words[1])?;
                    block = Some((line, Block::Algebra(AlgebraDecl { name, kind, basis: Vec::new(), entries: Vec::new() })));
                }
                "representation" => {
                    if words.len() != 6 || words[2] != "of" || words[4] != "on" {
                        return Err(syntax(line, "expected `representation NAME of ALGEBRA on SPACE`"));
                    }
                    let name = pf.new_name(&mut names, line, words[1])?;
                    let algebra = pf.ternary_index(line, words[3])?;
                    let space = pf.new_name(&mut names, line, words[5])?;
                    block = Some((
                        line,
                        Block::Representation(RepresentationDecl { name, algebra, space, basis: Vec::new(), entries: Vec::new() }),
                    ));
                }
                "extension" => {
                    if words.len() != 6 || words[2] != "of" || words[4] != "by" {
                        return Err(syntax(line, "expected `extension NAME of G by H`"));
                    }
                    let name = pf.new_name(&mut names, line, words[1])?;
                    let g = pf.ternary_index(line, words[3])?;
                    let h = pf.ternary_index(line, words[5])?;
                    if g == h {
                        return Err(syntax(line, "an extension needs two distinct algebra declarations"));
                    }
                    block = Some((
                        line,
                        Block::Extension(ExtensionDecl { name, g, h, rho: Vec::new(), nu: Vec::new(), omega: Vec::new() }),
                    ));
                }
                other => return Err(syntax(line, format!("unknown directive `{other}`"))),
            }
        }
        if !header {
            return Err(syntax(1, format!("expected header `{FORMAT_HEADER}`")));
        }
        if let Some((line, _)) = block {
            return Err(syntax(line, "block is not closed by `end`"));
        }
        Ok(pf)
    }

    fn new_name(&self, names: &mut BTreeSet<String>, line: usize, name: &str) -> Result<String> {
        if !is_ident(name) {
            return Err(syntax(line, format!("invalid name `{name}`")));
        }
        if !names.insert(name.to_string()) {
            return Err(syntax(line, format!("`{name}` declared twice")));
        }
        Ok(name.to_string())
    }

    fn ternary_index(&self, line: usize, name: &str) -> Result<usize> {
        let i = self.algebras.iter().position(|a| a.name == name).ok_or_else(|| Error::Undeclared(name.to_string()))?;
        if self.algebras[i].kind != AlgebraKind::Ternary {
            return Err(syntax(line, format!("`{name}` is not a ternary algebra")));
        }
        Ok(i)
    }

    fn block_line(&self, ctx: &Ctx, b: &mut Block, line: usize, l: &str) -> Result<()> {
        if let Some(rest) = l.strip_prefix("basis") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                return Err(syntax(line, format!("unexpected `{l}`")));
            }
            let basis = match b {
                Block::Algebra(a) => &mut a.basis,
                Block::Representation(r) => &mut r.basis,
                Block::Extension(_) => return Err(syntax(line, "extensions take their bases from g and h")),
            };
            if !basis.is_empty() {
                return Err(syntax(line, "basis given twice"));
            }
            for n in rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                if !is_ident(n) || basis.iter().any(|x| x == n) {
                    return Err(syntax(line, format!("invalid or repeated basis name `{n}`")));
                }
                basis.push(n.to_string());
            }
            return Ok(());
        }
        let (lhs, rhs) = l.split_once('=').ok_or_else(|| syntax(line, format!("expected an entry `... = value`, got `{l}`")))?;
        let (head, inner, tail) = split_ref(line, lhs)?;
        match b {
            Block::Algebra(a) => {
                if !head.is_empty() || tail.is_some() {
                    return Err(syntax(line, "expected a bracket entry `[a,b,...] = value`"));
                }
                let arity = if a.kind == AlgebraKind::Ternary { 3 } else { 2 };
                if inner.len() != arity {
                    return Err(syntax(line, format!("expected {arity} arguments")));
                }
                let ix = indices(&a.basis, &inner)?;
                if a.kind == AlgebraKind::Ternary && !strictly_increasing(&ix) {
                    return Err(syntax(line, "ternary entries must list strictly increasing basis indices"));
                }
                let v = ctx.value(line, rhs, &a.basis)?;
                push_unique(line, &mut a.entries, ix, v)
            }
            Block::Representation(r) => {
                let g = &self.algebras[r.algebra];
                let tail = tail.ok_or_else(|| syntax(line, "expected `rho[x,y](w) = value`"))?;
                if head != "rho" || inner.len() != 2 || tail.len() != 1 {
                    return Err(syntax(line, "expected `rho[x,y](w) = value`"));
                }
                let ix = indices(&g.basis, &inner)?;
                if !strictly_increasing(&ix) {
                    return Err(syntax(line, "rho entries must list strictly increasing basis indices"));
                }
                let k = lookup(&r.basis, &tail[0])?;
                let v = ctx.value(line, rhs, &r.basis)?;
                push_unique(line, &mut r.entries, (ix[0], ix[1], k), v)
            }
            Block::Extension(e) => {
                let (g, h) = (&self.algebras[e.g], &self.algebras[e.h]);
                let v = ctx.value(line, rhs, &h.basis)?;
                match (head.as_str(), inner.len(), tail.as_ref().map(Vec::len)) {
                    ("rho", 2, Some(1)) => {
                        let ix = indices(&g.basis, &inner)?;
                        let k = lookup(&h.basis, &tail.expect("tail")[0])?;
                        if !strictly_increasing(&ix) {
                            return Err(syntax(line, "rho entries must list strictly increasing basis indices"));
                        }
                        push_unique(line, &mut e.rho, (ix[0], ix[1], k), v)
                    }
                    ("nu", 1, Some(2)) => {
                        let i = lookup(&g.basis, &inner[0])?;
                        let ab = indices(&h.basis, &tail.expect("tail"))?;
                        if !strictly_increasing(&ab) {
                            return Err(syntax(line, "nu entries must list strictly increasing basis indices"));
                        }
                        push_unique(line, &mut e.nu, (i, ab[0], ab[1]), v)
                    }
                    ("omega", 3, None) => {
                        let ix = indices(&g.basis, &inner)?;
                        if !strictly_increasing(&ix) {
                            return Err(syntax(line, "omega entries must list strictly increasing basis indices"));
                        }
                        push_unique(line, &mut e.omega, (ix[0], ix[1], ix[2]), v)
                    }
                    _ => Err(syntax(line, "expected `rho[x,y](v)`, `nu[x](u,v)` or `omega[x,y,z]`")),
                }
            }
        }
    }

    /// Parameters not fixed by `fixed`, in declaration order.
    pub fn free_params(&self, fixed: &Assignment) -> Vec<String> {
        self.params.iter().filter(|p| !fixed.contains_key(*p)).cloned().collect()
    }

    /// Checks every guard at `env`.
    pub fn check_guards(&self, env: &Assignment) -> Result<()> {
        for (text, g) in &self.guards {
            match g.eval(env) {
                Ok(v) if !v.is_zero() => {}
                Ok(_) | Err(Error::DivisionByZero) => return Err(Error::Constraint { guard: text.clone() }),
                Err(e) => return Err(e),
            }
        }
        Ok(())
    }

    /// Evaluates every entry at `env` (after checking the guards).
    pub fn instantiate(&self, env: &Assignment) -> Result<Instance> {
        if let Some(p) = env.keys().find(|p| !self.params.contains(p)) {
            return Err(Error::Undeclared(p.clone()));
        }
        self.check_guards(env)?;
        let vec = |n: usize, lc: &LinComb| -> Result<Vec<Scalar>> {
            let mut v = vec![Scalar::zero(); n];
            for (i, e) in lc {
                v[*i] = e.eval(env)?;
            }
            Ok(v)
        };
        let mut inst = Instance { ternary: Vec::new(), binary: Vec::new(), representations: Vec::new(), extensions: Vec::new() };
        let mut ternary_by_decl = Vec::with_capacity(self.algebras.len());
        for a in &self.algebras {
            let n = a.basis.len();
            match a.kind {
                AlgebraKind::Ternary => {
                    let mut alg = ThreeLieAlgebra::abelian(&a.name, a.basis.clone());
                    for (ix, lc) in &a.entries {
                        alg.set_bracket(ix[0], ix[1], ix[2], vec(n, lc)?)?;
                    }
                    ternary_by_decl.push(Some(alg.clone()));
                    inst.ternary.push((a.name.clone(), alg));
                }
                AlgebraKind::Binary => {
                    let mut alg = LeibnizAlgebra::abelian(&a.name, a.basis.clone());
                    for (ix, lc) in &a.entries {
                        alg.set_bracket(ix[0], ix[1], vec(n, lc)?)?;
                    }
                    ternary_by_decl.push(None);
                    inst.binary.push((a.name.clone(), alg));
                }
            }
        }
        let ternary = |i: usize| ternary_by_decl[i].clone().expect("checked at parse time");
        for r in &self.representations {
            let g = ternary(r.algebra);
            let m = r.basis.len();
            let mut rep = Representation::zero(g.clone(), &r.space, r.basis.clone());
            let vid = SpaceId::new(&r.space);
            let mut maps: Vec<((usize, usize), LinearMap)> = Vec::new();
            for ((i, j, k), lc) in &r.entries {
                let v = vec(m, lc)?;
                let pos = match maps.iter().position(|(p, _)| *p == (*i, *j)) {
                    Some(p) => p,
                    None => {
                        maps.push(((*i, *j), LinearMap::zero(vid.clone(), m, vid.clone(), m)));
                        maps.len() - 1
                    }
                };
                for (row, c) in v.into_iter().enumerate() {
                    maps[pos].1.set(row, *k, c);
                }
            }
            for ((i, j), map) in maps {
                rep.set_rho(i, j, map)?;
            }
            inst.representations.push((r.name.clone(), rep));
        }
        for e in &self.extensions {
            let (g, h) = (ternary(e.g), ternary(e.h));
            let m = h.dim();
            let mut d = ExtensionDatum::zero(g, h);
            for ((i, j, k), lc) in &e.rho {
                d.set_rho(*i, *j, *k, vec(m, lc)?)?;
            }
            for ((i, a, b), lc) in &e.nu {
                d.set_nu(*i, *a, *b, vec(m, lc)?)?;
            }
            for ((i, j, k), lc) in &e.omega {
                d.set_omega(*i, *j, *k, vec(m, lc)?)?;
            }
            inst.extensions.push((e.name.clone(), d));
        }
        Ok(inst)
    }
}

/// Parses `name=value,name=value` (values are exact rationals such as `3`, `-1/2`).
pub fn parse_assignment(text: &str) -> Result<Assignment> {
    let mut out = Assignment::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected `name=value`, got `{item}`") })?;
        let v = ParamExpr::parse(value)?.eval(&Assignment::new())?;
        if out.insert(name.trim().to_string(), v).is_some() {
            return Err(Error::Parse { pos: 0, msg: format!("parameter `{}` assigned twice", name.trim()) });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
tlx 1
# the three-dimensional algebra and a one-parameter extension
params r1 r2
guard r2

algebra g ternary
  basis x1 x2 x3
  [x1,x2,x3] = x1
end
algebra h ternary
  basis v1 v2 v3
  [v1,v2,v3] = {v1: 1}
end
extension E of g by h
  nu[x1](v2,v3) = {v1: r1/r2}
  omega[x1,x2,x3] = {v1: -r1/r2}
end
tasks check-extension
";

    fn env(pairs: &[(&str, i64)]) -> Assignment {
        pairs.iter().map(|(n, v)| (n.to_string(), Scalar::from_int(*v))).collect()
    }

    #[test]
    fn parses_and_instantiates() {
        let pf = ProblemFile::parse(SMALL).unwrap();
        assert_eq!(pf.params, ["r1", "r2"]);
        assert_eq!(pf.tasks, ["check-extension"]);
        let inst = pf.instantiate(&env(&[("r1", 3), ("r2", 2)])).unwrap();
        let d = &inst.extensions[0].1;
        let e = |i| {
            let mut v = vec![Scalar::zero(); 3];
            v[i] = Scalar::one();
            v
        };
        assert_eq!(d.nu_apply(&e(0), &e(2), &e(1))[0], Scalar::ratio(-3, 2).unwrap());
        assert_eq!(d.omega_apply(&e(1), &e(0), &e(2))[0], Scalar::ratio(3, 2).unwrap());
        assert!(inst.ternary[0].1.is_three_lie().passed());
    }

    #[test]
    fn guard_violation_names_the_guard() {
        let pf = ProblemFile::parse(SMALL).unwrap();
        assert_eq!(pf.instantiate(&env(&[("r1", 1), ("r2", 0)])).unwrap_err(), Error::Constraint { guard: "r2".into() });
    }

    #[test]
    fn unbound_and_undeclared() {
        let pf = ProblemFile::parse(SMALL).unwrap();
        assert_eq!(pf.instantiate(&env(&[("r2", 1)])).unwrap_err(), Error::UnboundParameter("r1".into()));
        assert_eq!(pf.instantiate(&env(&[("r1", 1), ("r2", 1), ("r9", 1)])).unwrap_err(), Error::Undeclared("r9".into()));
        let bad = SMALL.replace("{v1: r1/r2}", "{v1: r7}");
        assert_eq!(ProblemFile::parse(&bad).unwrap_err(), Error::Undeclared("r7".into()));
        let bad = SMALL.replace("nu[x1](v2,v3)", "nu[x4](v2,v3)");
        assert_eq!(ProblemFile::parse(&bad).unwrap_err(), Error::Undeclared("x4".into()));
        let bad = SMALL.replace("of g by h", "of g by k");
        assert_eq!(ProblemFile::parse(&bad).unwrap_err(), Error::Undeclared("k".into()));
    }

    #[test]
    fn rejects_non_canonical_and_duplicate_entries() {
        let bad = SMALL.replace("[x1,x2,x3] = x1", "[x2,x1,x3] = x1");
        assert!(matches!(ProblemFile::parse(&bad), Err(Error::Syntax { line: 8, .. })));
        let bad = SMALL.replace("[x1,x2,x3] = x1", "[x1,x2,x3] = x1\n  [x1,x2,x3] = x2");
        assert!(matches!(ProblemFile::parse(&bad), Err(Error::Syntax { line: 9, .. })));
        let bad = SMALL.replace("nu[x1](v2,v3)", "nu[x1](v3,v2)");
        assert!(matches!(ProblemFile::parse(&bad), Err(Error::Syntax { .. })));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(ProblemFile::parse("algebra g ternary\nend"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(ProblemFile::parse("tlx 1\nalgebra g ternary\n basis a"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(ProblemFile::parse("tlx 1\nfoo"), Err(Error::Syntax { line: 2, .. })));
        assert_eq!(ProblemFile::parse("tlx 1\ntasks check-everything").unwrap_err(), Error::UnknownTask("check-everything".into()));
        assert!(matches!(
            ProblemFile::parse("tlx 1\nparams r\nalgebra g ternary\n basis a b c\n [a,b,c] = {a: (r}\nend"),
            Err(Error::Syntax { line: 5, .. })
        ));
    }

    #[test]
    fn empty_algebra_loads() {
        let pf = ProblemFile::parse("tlx 1\nalgebra z ternary\n  basis\nend\n").unwrap();
        let inst = pf.instantiate(&Assignment::new()).unwrap();
        assert_eq!(inst.ternary[0].1.dim(), 0);
        assert!(inst.ternary[0].1.is_three_lie().passed());
    }

    #[test]
    fn binary_and_representation_blocks() {
        let text = "tlx 1
algebra L binary
  basis e1 e2
  [e2,e1] = {e1: -1}
  [e1,e1] = 0
end
algebra g ternary
  basis x1 x2 x3
  [x1,x2,x3] = x1
end
representation R of g on V
  basis w1
  rho[x2,x3](w1) = {w1: 1/3}
end
";
        let inst = ProblemFile::parse(text).unwrap().instantiate(&Assignment::new()).unwrap();
        assert_eq!(inst.binary[0].1.basis_bracket(1, 0), &[Scalar::from_int(-1), Scalar::zero()]);
        let rep = &inst.representations[0].1;
        assert_eq!(rep.rho_basis(1, 2).get(0, 0), &Scalar::ratio(1, 3).unwrap());
        assert_eq!(rep.rho_basis(2, 1).get(0, 0), &Scalar::ratio(-1, 3).unwrap());
    }

    #[test]
    fn assignments() {
        let a = parse_assignment("r1=1, r2=-1/2").unwrap();
        assert_eq!(a["r2"], Scalar::ratio(-1, 2).unwrap());
        assert!(parse_assignment("r1").is_err());
        assert!(parse_assignment("r1=1,r1=2").is_err());
    }
}
