use std::path::Path;

use greenfn::blocks::{gl_principal_block, load_block, sl_block_with_y, BlockDescriptor};
use greenfn::exactalg::{matrix, Json, LaurentPoly};
use greenfn::lusztig::{factorize, GreenTable};
use greenfn::restriction::{r_matrix, restrict_ggg, subregular_restriction, LeviEmbedding};
use serde_json::{json, Value};

use crate::report::{sparse, Report, Table};

/// Where the block comes from; exactly one source is given.
pub enum BlockSource<'a> {
    Gl(usize),
    Sl { n: usize, d: usize, j: usize },
    Load(&'a Path),
}

pub fn resolve_block(src: &BlockSource) -> anyhow::Result<BlockDescriptor> {
    Ok(match src {
        BlockSource::Gl(n) => gl_principal_block(*n)?,
        BlockSource::Sl { n, d, j } => sl_block_with_y(*n, *d, *j)?,
        BlockSource::Load(p) => {
            let text =
                std::fs::read_to_string(p).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
            load_block(&text)?
        }
    })
}

fn ids(b: &BlockDescriptor) -> Vec<String> {
    b.pairs().iter().map(|p| p.id.clone()).collect()
}

fn pairs_json(b: &BlockDescriptor) -> Value {
    let chars = b.group().characters();
    Value::Array(
        b.pairs()
            .iter()
            .map(|p| {
                json!({
                    "id": p.id,
                    "support": p.support,
                    "character": chars[p.phi].label,
                    "c": p.c().to_json(),
                    "a": p.a,
                    "dual": b.pair(p.dual).id,
                })
            })
            .collect(),
    )
}

pub fn cmd_block(t: &GreenTable) -> Report {
    let b = t.block();
    let labels = ids(b);
    let classes: Vec<String> = b
        .group()
        .classes()
        .iter()
        .map(|c| c.label.clone())
        .collect();
    let qtilde: Vec<Vec<LaurentPoly>> = t.qtilde().iter().map(|f| f.values().to_vec()).collect();
    let mut r = Report::new("block");
    r.set("block", json!(b.name()));
    r.set("pairs", pairs_json(b));
    r.set("classes", json!(classes));
    r.set("omega", sparse(t.omega()));
    r.set("xi", sparse(t.xi()));
    r.set("ptilde", sparse(t.ptilde()));
    r.set("lambda", sparse(t.lambda()));
    r.set("qtilde", sparse(&qtilde));
    r.tables.push(Table::matrix(
        "P~ (rows and columns: pairs)",
        &labels,
        t.ptilde(),
    ));
    r.tables
        .push(Table::matrix("Lambda (normalized)", &labels, t.lambda()));
    r.tables
        .push(Table::matrix("Omega (normalized)", &labels, t.omega()));
    r.tables
        .push(Table::matrix("Xi (normalized)", &labels, t.xi()));
    r.tables.push(Table::labelled(
        "Q~ (rows: pairs, columns: W-classes)",
        &labels,
        &classes,
        &qtilde,
    ));
    r
}

pub struct RestrictOptions<'a> {
    pub n: usize,
    pub levi: &'a [usize],
    pub ggg: Option<&'a str>,
    pub subregular: bool,
}

pub fn cmd_restrict(o: &RestrictOptions) -> anyhow::Result<Report> {
    if o.levi.iter().sum::<usize>() != o.n {
        anyhow::bail!("Levi composition {:?} does not sum to {}", o.levi, o.n);
    }
    let e = LeviEmbedding::gl(o.levi)?;
    let tg = factorize(e.ambient())?;
    let tm = factorize(e.sub())?;
    let d = r_matrix(&e, &tg, &tm)?;
    let g_ids = ids(e.ambient());
    let m_ids = ids(e.sub());
    let rstar = matrix::map(&d.r, |x| x.star());
    let mut r = Report::new("restrict");
    r.set("ambient", json!(e.ambient().name()));
    r.set("levi", json!(o.levi));
    r.set("ambient_pairs", json!(g_ids));
    r.set("levi_pairs", json!(m_ids));
    r.set("eps_levi", json!(e.eps()));
    r.set("branching", json!(d.branching));
    r.set("r", sparse(&d.r));
    r.set("r_star", sparse(&rstar));
    r.tables.push(Table::labelled(
        "ResMat (rows: Levi pairs, columns: ambient pairs)",
        &m_ids,
        &g_ids,
        &d.branching,
    ));
    r.tables.push(Table::labelled(
        "R (rows: ambient pairs, columns: Levi pairs)",
        &g_ids,
        &m_ids,
        &d.r,
    ));
    r.tables
        .push(Table::labelled("star(R)", &g_ids, &m_ids, &rstar));
    if let Some(id) = o.ggg {
        let i = e
            .ambient()
            .pair_by_id(id)
            .ok_or_else(|| anyhow::anyhow!("no pair {id:?} in {}", e.ambient().name()))?;
        let coeffs = restrict_ggg(&e, &d, i);
        r.set(
            "ggg",
            json!({
                "pair": id,
                "coefficients": m_ids.iter().zip(&coeffs).filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(l, c)| json!({ "pair": l, "value": c.to_json() })).collect::<Vec<_>>(),
            }),
        );
        r.tables.push(Table::labelled(
            &format!("restriction of Gamma~_{id}"),
            &m_ids,
            &["coefficient".to_string()],
            &coeffs.iter().map(|c| vec![c.clone()]).collect::<Vec<_>>(),
        ));
    }
    if o.subregular {
        let id = format!("{}+1", o.n - 1);
        let sigma = e
            .ambient()
            .pair_by_id(&id)
            .ok_or_else(|| anyhow::anyhow!("GL{} has no subregular pair", o.n))?;
        let s = subregular_restriction(&e, sigma)?;
        let pipeline_coeff = d.r[sigma][s.rho_m].clone();
        let ggg_pipeline = restrict_ggg(&e, &d, sigma);
        let rows = vec![
            vec![
                "coefficient on rho_M".into(),
                s.coefficient.to_string(),
                pipeline_coeff.to_string(),
                (s.coefficient == pipeline_coeff).to_string(),
            ],
            vec![
                "Res Q~ row".into(),
                "-".into(),
                "-".into(),
                (s.qtilde == d.r[sigma]).to_string(),
            ],
            vec![
                "Gamma side".into(),
                "-".into(),
                "-".into(),
                (s.gamma == ggg_pipeline).to_string(),
            ],
        ];
        r.set(
            "subregular",
            json!({
                "pair": id,
                "k": s.k,
                "rho_m": m_ids[s.rho_m],
                "sigma_i": s.sigma_i.iter().map(|&x| m_ids[x].clone()).collect::<Vec<_>>(),
                "closed_form": s.coefficient.to_json(),
                "pipeline": pipeline_coeff.to_json(),
                "coefficient_equal": s.coefficient == pipeline_coeff,
                "row_equal": s.qtilde == d.r[sigma],
                "gamma_equal": s.gamma == ggg_pipeline,
            }),
        );
        r.tables.push(Table {
            title: format!("subregular pair {id}: closed form vs pipeline"),
            header: vec![
                "quantity".into(),
                "closed form".into(),
                "pipeline".into(),
                "equal".into(),
            ],
            rows,
        });
    }
    Ok(r)
}
