//! Named groups, morphisms, squares and fills collected from input files.
//!
//! Every file may carry `groups`, `morphisms`, `squares` and `fills` maps.
//! Names are resolved across all files of a run before anything is computed.
//! Groups may also be written inline or as `0`, `Z`, `Z^n`, `Z/n`.

use std::collections::BTreeMap;
use std::sync::Arc;

use abtqft::fgab::{FgAbGroup, GroupMorphism, IntMatrix};
use abtqft::moncat::{CommSquare, DiagonalFill};

use crate::input::{Doc, InputError, Node};

/// A square together with the diagonal it was built from, if any.
#[derive(Clone, Debug)]
pub struct Square {
    pub square: CommSquare,
    pub lambda: Option<GroupMorphism>,
}

#[derive(Default)]
pub struct Workspace {
    groups: BTreeMap<String, Arc<FgAbGroup>>,
    morphisms: BTreeMap<String, GroupMorphism>,
    squares: BTreeMap<String, Square>,
    fills: BTreeMap<String, GroupMorphism>,
}

fn shorthand(name: &str) -> Option<Arc<FgAbGroup>> {
    match name {
        "0" => Some(FgAbGroup::trivial()),
        "Z" => Some(FgAbGroup::free(1)),
        _ => {
            if let Some(n) = name.strip_prefix("Z^") {
                return n.parse().ok().map(FgAbGroup::free);
            }
            let n: i64 = name.strip_prefix("Z/")?.parse().ok()?;
            (n > 0).then(|| FgAbGroup::cyclic(n))
        }
    }
}

impl Workspace {
    pub fn load(docs: &[&Doc]) -> Result<Self, InputError> {
        let mut ws = Workspace::default();
        for doc in docs {
            for (name, node) in section(doc, "groups")? {
                let g = ws.group_def(&node)?;
                insert(&mut ws.groups, name, g, &node)?;
            }
        }
        for doc in docs {
            for (name, node) in section(doc, "morphisms")? {
                let m = ws.morphism(&node)?;
                insert(&mut ws.morphisms, name, m, &node)?;
            }
        }
        for doc in docs {
            for (name, node) in section(doc, "squares")? {
                let s = ws.square(&node)?;
                insert(&mut ws.squares, name, s, &node)?;
            }
            for (name, node) in section(doc, "fills")? {
                let f = ws.fill(&node)?;
                insert(&mut ws.fills, name, f, &node)?;
            }
        }
        Ok(ws)
    }

    fn group_def(&self, node: &Node) -> Result<Arc<FgAbGroup>, InputError> {
        let n = node.get("generators")?.usize()?;
        let rows = match node.opt("relations") {
            Some(r) => r.int_rows(Some(n))?,
            None => Vec::new(),
        };
        FgAbGroup::from_relation_rows(n, &rows).map_err(|e| node.err(e.to_string()))
    }

    /// A group name, shorthand, or inline `{generators, relations}`.
    pub fn group(&self, node: &Node) -> Result<Arc<FgAbGroup>, InputError> {
        match node.value.as_str() {
            Some(name) => self
                .groups
                .get(name)
                .cloned()
                .or_else(|| shorthand(name))
                .ok_or_else(|| node.err(format!("unknown group {name:?}"))),
            None => self.group_def(node),
        }
    }

    /// A morphism name or inline `{source, target, matrix}`; `matrix` has
    /// one row per target generator.
    pub fn morphism(&self, node: &Node) -> Result<GroupMorphism, InputError> {
        if let Some(name) = node.value.as_str() {
            return self
                .morphisms
                .get(name)
                .cloned()
                .ok_or_else(|| node.err(format!("unknown morphism {name:?}")));
        }
        let source = self.group(&node.get("source")?)?;
        let target = self.group(&node.get("target")?)?;
        let m = node.get("matrix")?;
        let rows = m.int_rows(Some(source.n_generators()))?;
        if rows.len() != target.n_generators() {
            return Err(m.err(format!(
                "expected {} rows (one per target generator), found {}",
                target.n_generators(),
                rows.len()
            )));
        }
        let matrix = IntMatrix::from_rows(source.n_generators(), &rows).ok_or_else(|| m.err("ragged matrix"))?;
        GroupMorphism::new(&source, &target, matrix).map_err(|e| m.err(e.to_string()))
    }

    /// A square name, `{phi_h, phi_g, lambda}`, or `{phi_h, phi_g, f_ob, f_mor}`.
    pub fn square(&self, node: &Node) -> Result<Square, InputError> {
        if let Some(name) = node.value.as_str() {
            return self
                .squares
                .get(name)
                .cloned()
                .ok_or_else(|| node.err(format!("unknown square {name:?}")));
        }
        let phi_h = self.morphism(&node.get("phi_h")?)?;
        let phi_g = self.morphism(&node.get("phi_g")?)?;
        if let Some(l) = node.opt("lambda") {
            let lambda = self.morphism(&l)?;
            let square = CommSquare::from_diagonal(&phi_h, &phi_g, &lambda).map_err(|e| l.err(e.to_string()))?;
            return Ok(Square {
                square,
                lambda: Some(lambda),
            });
        }
        let f_ob = self.morphism(&node.get("f_ob")?)?;
        let f_mor = self.morphism(&node.get("f_mor")?)?;
        let square = CommSquare::new(phi_h, phi_g, f_ob, f_mor).map_err(|e| node.err(e.to_string()))?;
        Ok(Square { square, lambda: None })
    }

    /// A fill name, a morphism reference, or `{lambda}`.
    pub fn fill(&self, node: &Node) -> Result<GroupMorphism, InputError> {
        if let Some(name) = node.value.as_str() {
            if let Some(f) = self.fills.get(name) {
                return Ok(f.clone());
            }
            return self.morphism(node);
        }
        match node.opt("lambda") {
            Some(l) => self.morphism(&l),
            None => self.morphism(node),
        }
    }

    /// The morphism a file stands for: its top level, or its only entry.
    pub fn main_morphism(&self, doc: &Doc) -> Result<GroupMorphism, InputError> {
        let root = doc.root();
        if root.has("matrix") || root.value.is_string() {
            return self.morphism(&root);
        }
        self.morphism(&only(&root, "morphisms")?)
    }

    pub fn main_square(&self, doc: &Doc) -> Result<Square, InputError> {
        let root = doc.root();
        if root.has("phi_h") || root.value.is_string() {
            return self.square(&root);
        }
        self.square(&only(&root, "squares")?)
    }

    pub fn main_fill(&self, doc: &Doc, square: &Square) -> Result<DiagonalFill, InputError> {
        let root = doc.root();
        let node = if root.has("lambda") || root.has("matrix") || root.value.is_string() {
            root
        } else if root.has("fills") {
            only(&root, "fills")?
        } else {
            only(&root, "morphisms")?
        };
        let lambda = self.fill(&node)?;
        DiagonalFill::new(&square.square, lambda).map_err(|e| node.err(e.to_string()))
    }
}

fn section<'a>(doc: &'a Doc, key: &str) -> Result<Vec<(String, Node<'a>)>, InputError> {
    match doc.root().opt(key) {
        Some(n) if doc.value.is_object() => n.entries(),
        _ => Ok(Vec::new()),
    }
}

fn only<'a>(root: &Node<'a>, key: &str) -> Result<Node<'a>, InputError> {
    let entries = root
        .opt(key)
        .ok_or_else(|| root.err(format!("no top-level entity and no `{key}` map")))?
        .entries()?;
    match <[_; 1]>::try_from(entries) {
        Ok([(_, node)]) => Ok(node),
        Err(v) => Err(root.err(format!("`{key}` has {} entries; cannot tell which one to use", v.len()))),
    }
}

fn insert<T>(map: &mut BTreeMap<String, T>, name: String, value: T, node: &Node) -> Result<(), InputError> {
    if map.contains_key(&name) {
        return Err(node.err(format!("{name:?} is defined more than once")));
    }
    map.insert(name, value);
    Ok(())
}
