use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::Subcommand;
use serde_json::json;

use abtqft::fgab::{FgAbGroup, GroupElement, GroupMorphism};
use abtqft::moncat::{xi_is_equivalence, DiagonalFill, HofibCat, MorTensorCat, XiFunctor};
use abtqft_acceptance::oracle::{solutions, BruteGroup, BruteMorphism, BruteSquare, Key};

use crate::group::{describe, generators};
use crate::input::{compute, parse_coords, CliError, InputError, Inputs};
use crate::report::{coords, Report};
use crate::workspace::{Square, Workspace};

/// Largest finite group the `--oracle` enumeration will walk.
const ORACLE_LIMIT: usize = 4096;

#[derive(Subcommand)]
pub enum CatCmd {
    /// `hom(a, b)` in the category of a morphism `φ: A → B`.
    Hom {
        morphism: PathBuf,
        /// Source object, as target coordinates `3` or `1,-2`.
        a: String,
        /// Target object.
        b: String,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Object group and automorphisms of the homotopy fiber of a square.
    Hofiber {
        square: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// The comparison functor onto `ker φ_G` and whether it is an equivalence.
    Xi {
        square: PathBuf,
        /// Diagonal fill; defaults to the square's own diagonal.
        fill: Option<PathBuf>,
        #[arg(long)]
        oracle: bool,
    },
}

fn brute(g: &FgAbGroup) -> Option<BruteGroup> {
    let n = g.n_generators();
    if n == 0 || g.relations().rows() != n || g.order()? as usize > ORACLE_LIMIT {
        return None;
    }
    BruteGroup::new(g.relations().row_vecs())
}

fn brute_mor(m: &GroupMorphism) -> BruteMorphism {
    BruteMorphism {
        matrix: m.matrix().row_vecs(),
    }
}

const SKIPPED: &str = "oracle: skipped (needs finite groups with square presentations)";

fn arg_err(arg: &str, message: String) -> InputError {
    InputError {
        file: "<command line>".into(),
        path: arg.into(),
        message,
    }
}

fn element(g: &Arc<FgAbGroup>, arg: &str, text: &str) -> Result<GroupElement, InputError> {
    let c = parse_coords(text, g.n_generators()).map_err(|m| arg_err(arg, m))?;
    GroupElement::new(g, c).map_err(|e| arg_err(arg, e.to_string()))
}

fn load_square(inputs: &mut Inputs, path: &Path) -> Result<Square, CliError> {
    let doc = inputs.load(path)?;
    let ws = Workspace::load(&[&doc])?;
    Ok(ws.main_square(&doc)?)
}

fn brute_square(sq: &Square, lambda: &GroupMorphism) -> Option<BruteSquare> {
    let s = &sq.square;
    Some(BruteSquare {
        h_mor: brute(s.h_mor())?,
        h_ob: brute(s.h_ob())?,
        g_mor: brute(s.g_mor())?,
        g_ob: brute(s.g_ob())?,
        phi_h: brute_mor(s.phi_h()),
        phi_g: brute_mor(s.phi_g()),
        lambda: brute_mor(lambda),
    })
}

pub fn run(cmd: CatCmd, inputs: &mut Inputs) -> Result<Report, CliError> {
    let mut r = Report::default();
    match cmd {
        CatCmd::Hom { morphism, a, b, oracle } => {
            let doc = inputs.load(&morphism)?;
            let ws = Workspace::load(&[&doc])?;
            let phi = ws.main_morphism(&doc)?;
            let target = phi.target().clone();
            let (x, y) = (element(&target, "a", &a)?, element(&target, "b", &b)?);
            let cat = MorTensorCat::new(phi.clone());
            let hom = cat.hom(&x, &y).map_err(compute)?;
            r.line(hom.to_string());
            r.set("empty", hom.is_empty())
                .set("cardinality", json!(hom.cardinality()))
                .set("particular", json!(hom.particular().map(|p| p.coords().to_vec())))
                .set("kernel", hom.kernel().structure());
            if oracle {
                match (brute(phi.source()), brute(&target)) {
                    (Some(sa), Some(sb)) => {
                        let want = solutions(&brute_mor(&phi), &sa, &sb, &sb.sub(y.coords(), x.coords()));
                        let got: Option<BTreeSet<Key>> = hom
                            .members(ORACLE_LIMIT as u64)
                            .map(|m| m.iter().map(|e| sa.key(e.coords())).collect());
                        let agree = got.as_ref() == Some(&want);
                        r.line(format!(
                            "oracle: {} ({} elements enumerated)",
                            if agree { "agrees" } else { "DISAGREES" },
                            want.len()
                        ));
                        r.set("oracle_agrees", agree);
                        r.failed |= !agree;
                    }
                    _ => {
                        r.line(SKIPPED);
                    }
                }
            }
        }
        CatCmd::Hofiber { square, oracle } => {
            let sq = load_square(inputs, &square)?;
            let hofib = HofibCat::new(&sq.square);
            let p = hofib.object_group();
            let gens: Vec<String> = (0..p.n_generators())
                .map(|i| {
                    let mut e = vec![0; p.n_generators()];
                    e[i] = 1;
                    let o = hofib.object_at(&e);
                    format!("[{}; {}]", coords(o.g.coords()), coords(o.h.coords()))
                })
                .collect();
            let unit = hofib.unit();
            let aut = hofib.hom(&unit, &unit).map_err(compute)?;
            r.line(format!("objects ≅ {}", p.structure()));
            if !gens.is_empty() {
                r.line(format!("generators [g; h]: {}", gens.join(" ")));
            }
            r.line(format!("aut(unit) ≅ {}", aut.kernel().structure()));
            r.set("objects", p.structure())
                .set("generators", json!(gens))
                .set("automorphisms", aut.kernel().structure());
            if oracle {
                check_hofiber(&mut r, &sq, &hofib)?;
            }
        }
        CatCmd::Xi { square, fill, oracle } => {
            let square_doc = inputs.load(&square)?;
            let fill_doc = fill.as_ref().map(|p| inputs.load(p)).transpose()?;
            let mut docs = vec![&square_doc];
            docs.extend(fill_doc.as_ref());
            let ws = Workspace::load(&docs)?;
            let sq = ws.main_square(&square_doc)?;
            let fill = match &fill_doc {
                Some(doc) => ws.main_fill(doc, &sq)?,
                None => {
                    let lambda = sq.lambda.clone().ok_or_else(|| {
                        square_doc.root().err("square has no `lambda`; pass a fill file")
                    })?;
                    DiagonalFill::new(&sq.square, lambda).map_err(compute)?
                }
            };
            let hofib = HofibCat::new(&sq.square);
            let xi = XiFunctor::new(&hofib, &fill).map_err(compute)?;
            let equivalence = xi_is_equivalence(&sq.square, &fill).map_err(compute)?;
            let (k, incl) = xi.kernel();
            let gens = generators(incl.matrix());
            r.line(format!(
                "equivalence: {equivalence}; target: ker ≅ {}",
                describe_paren(&k.structure(), &gens)
            ));
            r.set("equivalence", equivalence)
                .set("kernel", k.structure())
                .set("kernel_generators", json!(gens));
            if oracle {
                let enumerated = xi.enumerate_equivalence(ORACLE_LIMIT as u64);
                match (enumerated, brute_square(&sq, fill.lambda())) {
                    (Some(e), Some(bs)) => {
                        let fiber = bs.fiber();
                        let (es, ff) = bs.xi_equivalence(&fiber);
                        let agree = e.is_equivalence() == equivalence && (es && ff) == equivalence;
                        r.line(format!(
                            "oracle: {} (essentially surjective {es}, fully faithful {ff}, {} objects)",
                            if agree { "agrees" } else { "DISAGREES" },
                            fiber.objects.len()
                        ));
                        r.set("oracle_agrees", agree);
                        r.failed |= !agree;
                    }
                    _ => {
                        r.line(SKIPPED);
                    }
                }
            }
        }
    }
    Ok(r)
}

/// `Z (gen 24)` rather than `Z, gen 24`.
fn describe_paren(structure: &str, gens: &[Vec<i64>]) -> String {
    match describe(structure, gens).split_once(", ") {
        Some((s, g)) => format!("{s} ({g})"),
        None => structure.to_string(),
    }
}

fn check_hofiber(r: &mut Report, sq: &Square, hofib: &HofibCat) -> Result<(), CliError> {
    let Some(bs) = sq.lambda.as_ref().and_then(|l| brute_square(sq, l)) else {
        r.line(SKIPPED);
        return Ok(());
    };
    let fiber = bs.fiber();
    let mut agree = hofib.object_group().order() == Some(fiber.objects.len() as u64);
    let (g_mor, h_ob) = (sq.square.g_mor().clone(), sq.square.h_ob().clone());
    let mut pairs = 0;
    for a in fiber.objects.iter().take(32) {
        let oa = hofib
            .object(GroupElement::new(&g_mor, a.0.clone()).map_err(compute)?, GroupElement::new(&h_ob, a.1.clone()).map_err(compute)?)
            .map_err(compute)?;
        for b in fiber.objects.iter().take(32) {
            let ob = hofib
                .object(GroupElement::new(&g_mor, b.0.clone()).map_err(compute)?, GroupElement::new(&h_ob, b.1.clone()).map_err(compute)?)
                .map_err(compute)?;
            let hom = hofib.hom(&oa, &ob).map_err(compute)?;
            let got: Option<BTreeSet<Key>> = hom
                .members(ORACLE_LIMIT as u64)
                .map(|m| m.iter().map(|x| bs.h_mor.key(x.coords())).collect());
            agree &= got == Some(bs.fiber_hom(a, b));
            pairs += 1;
        }
    }
    r.line(format!(
        "oracle: {} ({} objects, {pairs} hom-sets enumerated)",
        if agree { "agrees" } else { "DISAGREES" },
        fiber.objects.len()
    ));
    r.set("oracle_agrees", agree);
    r.failed |= !agree;
    Ok(())
}
