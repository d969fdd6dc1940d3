use std::collections::BTreeMap;
use std::sync::OnceLock;

use graph_core::{edge, Edge, Graph};
use serde::Deserialize;

use crate::program::Primitive;

const CATALOG_JSON: &str = include_str!("../catalog/rules.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Ci,
    Cii,
}

/// A predicate over a binding. Constraints naming an unbound optional role
/// hold vacuously.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    Deg(String, usize, usize),
    Edge(String, String),
    NonEdge(String, String),
    Odd(String),
    Even(String),
    AnyOdd(Vec<String>),
    AnyEven(Vec<String>),
    Distinct(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum EditTemplate {
    Shortcut {
        shortcut: [String; 2],
        via: Vec<String>,
        #[serde(default)]
        optional: bool,
    },
    Add {
        add: [String; 2],
    },
    Remove {
        remove: [String; 2],
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum StepTemplate {
    Extend { at: String, edges: Vec<[String; 2]> },
    NewColor { edges: Vec<[String; 2]> },
    Deviate { edge: [String; 2], through: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Recoloring {
    Program { program: Vec<StepTemplate> },
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct Rule {
    pub id: String,
    pub family: Family,
    pub special: Vec<String>,
    pub roles: Vec<String>,
    pub matcher: Vec<Constraint>,
    pub edits: Vec<EditTemplate>,
    #[serde(default)]
    pub composite: bool,
    /// New colors the rule may introduce.
    pub budget: usize,
    /// Vertices the reduction deletes.
    pub removes: usize,
    pub recoloring: Recoloring,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Catalog {
    pub version: u32,
    pub rules: Vec<Rule>,
}

impl Catalog {
    pub fn rule(&self, id: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.rules.iter().map(|r| r.id.as_str())
    }
}

/// The catalog shipped in `catalog/rules.json`, parsed and checked once.
pub fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| {
        let cat: Catalog = serde_json::from_str(CATALOG_JSON).expect("catalog/rules.json parses");
        if let Err(e) = check_catalog(&cat) {
            panic!("catalog/rules.json is inconsistent: {e}");
        }
        cat
    })
}

fn strip(role: &str) -> &str {
    role.strip_suffix('?').unwrap_or(role)
}

/// Every role mentioned anywhere in a rule must be declared, ids must be
/// unique and the recoloring must be a program or "synthesized".
pub fn check_catalog(cat: &Catalog) -> Result<(), String> {
    let mut seen = std::collections::BTreeSet::new();
    for r in &cat.rules {
        if !seen.insert(r.id.as_str()) {
            return Err(format!("duplicate rule id {}", r.id));
        }
        let declared = |name: &str| r.roles.iter().any(|x| strip(x) == strip(name));
        let mut mentioned: Vec<&str> = r.special.iter().map(String::as_str).collect();
        for c in &r.matcher {
            mentioned.extend(constraint_roles(c));
        }
        for e in &r.edits {
            match e {
                EditTemplate::Shortcut { shortcut, via, .. } => {
                    mentioned.extend(shortcut.iter().map(String::as_str));
                    mentioned.extend(via.iter().map(String::as_str));
                }
                EditTemplate::Add { add: p } | EditTemplate::Remove { remove: p } => {
                    mentioned.extend(p.iter().map(String::as_str))
                }
            }
        }
        match &r.recoloring {
            Recoloring::Named(s) if s == "synthesized" => {}
            Recoloring::Named(s) => return Err(format!("{}: unknown recoloring {s:?}", r.id)),
            Recoloring::Program { program } => {
                for step in program {
                    match step {
                        StepTemplate::Extend { at, edges } => {
                            mentioned.push(at);
                            mentioned.extend(edges.iter().flatten().map(String::as_str));
                        }
                        StepTemplate::NewColor { edges } => {
                            mentioned.extend(edges.iter().flatten().map(String::as_str))
                        }
                        StepTemplate::Deviate { edge, through } => {
                            mentioned.extend(edge.iter().map(String::as_str));
                            mentioned.extend(through.iter().map(String::as_str));
                        }
                    }
                }
            }
        }
        if let Some(bad) = mentioned.iter().find(|m| !declared(m)) {
            return Err(format!("{}: role {bad} is not declared", r.id));
        }
        if r.special.len() != r.removes {
            return Err(format!("{}: removes {} but names {} specials", r.id, r.removes, r.special.len()));
        }
        if r.budget != r.removes / 2 {
            return Err(format!("{}: budget {} for {} removed vertices", r.id, r.budget, r.removes));
        }
    }
    Ok(())
}

fn constraint_roles(c: &Constraint) -> Vec<&str> {
    match c {
        Constraint::Deg(a, _, _) | Constraint::Odd(a) | Constraint::Even(a) => vec![a],
        Constraint::Edge(a, b) | Constraint::NonEdge(a, b) => vec![a, b],
        Constraint::AnyOdd(v) | Constraint::AnyEven(v) | Constraint::Distinct(v) => {
            v.iter().map(String::as_str).collect()
        }
    }
}

pub type Binding = BTreeMap<String, usize>;

fn lookup(b: &Binding, role: &str) -> Result<Option<usize>, String> {
    match b.get(strip(role)) {
        Some(&v) => Ok(Some(v)),
        None if role.ends_with('?') => Ok(None),
        None => Err(format!("role {role} is unbound")),
    }
}

/// Checks a binding against a rule's matcher. Returns the first failing
/// constraint as text.
pub fn check_matcher(g: &Graph, rule: &Rule, b: &Binding) -> Result<(), String> {
    let parity = |v: usize| g.degree(v) % 2;
    for c in &rule.matcher {
        let ok = match c {
            Constraint::Deg(a, lo, hi) => match lookup(b, a)? {
                Some(v) => (*lo..=*hi).contains(&g.degree(v)),
                None => true,
            },
            Constraint::Edge(x, y) | Constraint::NonEdge(x, y) => {
                match (lookup(b, x)?, lookup(b, y)?) {
                    (Some(p), Some(q)) => g.has_edge(p, q) == matches!(c, Constraint::Edge(..)),
                    _ => true,
                }
            }
            Constraint::Odd(a) => lookup(b, a)?.is_none_or(|v| parity(v) == 1),
            Constraint::Even(a) => lookup(b, a)?.is_none_or(|v| parity(v) == 0),
            Constraint::AnyOdd(roles) | Constraint::AnyEven(roles) => {
                let want = usize::from(matches!(c, Constraint::AnyOdd(_)));
                let mut any = false;
                for r in roles {
                    any |= lookup(b, r)?.is_some_and(|v| parity(v) == want);
                }
                any
            }
            Constraint::Distinct(roles) => {
                let mut vs = Vec::new();
                for r in roles {
                    vs.extend(lookup(b, r)?);
                }
                let k = vs.len();
                vs.sort_unstable();
                vs.dedup();
                vs.len() == k
            }
        };
        if !ok {
            return Err(format!("{}: {c:?} fails", rule.id));
        }
    }
    for role in &rule.roles {
        lookup(b, role)?;
    }
    Ok(())
}

fn pair(b: &Binding, p: &[String; 2]) -> Result<Option<Edge>, String> {
    Ok(match (lookup(b, &p[0])?, lookup(b, &p[1])?) {
        (Some(x), Some(y)) => Some(edge(x, y)),
        _ => None,
    })
}

/// The rule's recoloring program with roles replaced by vertices, or `None`
/// for synthesized rules.
pub fn instantiate_program(rule: &Rule, b: &Binding) -> Result<Option<Vec<Primitive>>, String> {
    let Recoloring::Program { program } = &rule.recoloring else {
        return Ok(None);
    };
    let mut out = Vec::new();
    for step in program {
        out.push(match step {
            StepTemplate::Extend { at, edges } => Primitive::Extend {
                at: lookup(b, at)?.ok_or("extension point unbound")?,
                edges: oriented(b, edges)?,
            },
            StepTemplate::NewColor { edges } => Primitive::AssignNewColor {
                edges: oriented(b, edges)?,
            },
            StepTemplate::Deviate { edge: e, through } => {
                let mut via = Vec::new();
                for r in through {
                    via.extend(lookup(b, r)?);
                }
                Primitive::Deviate {
                    edge: pair(b, e)?.ok_or("deviated edge unbound")?,
                    through: via,
                }
            }
        });
    }
    Ok(Some(out))
}

fn oriented(b: &Binding, edges: &[[String; 2]]) -> Result<Vec<(usize, usize)>, String> {
    let mut out = Vec::new();
    for p in edges {
        if let (Some(x), Some(y)) = (lookup(b, &p[0])?, lookup(b, &p[1])?) {
            out.push((x, y));
        }
    }
    Ok(out)
}
