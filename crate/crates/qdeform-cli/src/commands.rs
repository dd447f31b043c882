//! Subcommand runners: validate, compute, render.

use qdeform::dynamics::{
    closed_form_factor, closed_form_frequency, element_frequency, exact_evolution,
    integrate_evolution, EvolutionSpec, HamiltonianModel,
};
use qdeform::fock::{
    annihilator, aux_relation_residuals, relation_residual_with, FockRep, RepKind,
};
use qdeform::jackson::jackson_derivative_numeric;
use qdeform::laurent::rational_to_f64;
use qdeform::qnum::{basic_int, fermion_classical_limit, QValue};
use qdeform::{Complex64, Error, Result};

use crate::config::{BasicArgs, Command, EvolveArgs, FaultKind, FockArgs, IdentityArgs, LimitArgs};
use crate::output::{render, BasicRow, EvolveRow, FockRow, LimitRow};
use crate::suite::identity_suite;

/// Residual gate shared by the report subcommands.
pub const RESIDUAL_GATE: f64 = 1e-12;

/// Integrator-against-oracle gate for `evolve`.
pub const EVOLVE_GATE: f64 = 1e-8;

pub struct CommandOutput {
    pub body: String,
    pub failed: bool,
}

pub fn execute(command: &Command) -> Result<CommandOutput> {
    match command {
        Command::Basic(args) => cmd_basic(args),
        Command::Identity(args) => cmd_identity(args),
        Command::Fock(args) => cmd_fock(args),
        Command::Evolve(args) => cmd_evolve(args),
        Command::Limit(args) => cmd_limit(args),
    }
}

fn cmd_basic(args: &BasicArgs) -> Result<CommandOutput> {
    let kind = args.kind.to_kind();
    let mut rows = Vec::new();
    for n in 0..=args.n_max {
        let symbolic = basic_int(kind, n);
        let rendered = symbolic.to_string();
        for &q in &args.q {
            QValue::new(q)?;
            rows.push(BasicRow {
                kind: kind.label().into(),
                n,
                symbolic: rendered.clone(),
                q,
                value: symbolic.eval(q)?,
            });
        }
    }
    Ok(CommandOutput {
        body: render(&rows, args.common.format),
        failed: false,
    })
}

fn cmd_identity(args: &IdentityArgs) -> Result<CommandOutput> {
    if let Some(fault) = args.inject_fault {
        if fault != FaultKind::BasicNumber {
            return Err(Error::Domain(
                "the identity suite only supports the basic-number fault".into(),
            ));
        }
    }
    let rows = identity_suite(args.n_max, args.inject_fault)?;
    let failed = rows.iter().any(|r| !r.passed);
    Ok(CommandOutput {
        body: render(&rows, args.common.format),
        failed,
    })
}

fn cmd_fock(args: &FockArgs) -> Result<CommandOutput> {
    if let Some(fault) = args.inject_fault {
        if fault != FaultKind::LadderEntry {
            return Err(Error::Domain(
                "the fock report only supports the ladder-entry fault".into(),
            ));
        }
    }
    let kind = args.kind.to_kind();
    let dim = args.dim.unwrap_or(match kind {
        RepKind::StandardFermion => 2,
        _ => 32,
    });
    let mut rows = Vec::new();
    for &q in &args.q {
        let rep = FockRep::new(kind, QValue::new(q)?, dim)?;
        let mut ladder = annihilator(&rep);
        if args.inject_fault.is_some() {
            let bumped = ladder.entry(0, 1) + Complex64::new(1e-6, 0.0);
            let mut data = ladder.data().clone();
            data[[0, 1]] = bumped;
            ladder = qdeform::OperatorMatrix::from_array(data)?;
        }
        let residual = relation_residual_with(&rep, &ladder);
        rows.push(FockRow {
            kind: kind.label().into(),
            q,
            dim,
            relation: "ladder-algebra".into(),
            residual,
            passed: residual < RESIDUAL_GATE,
        });
        if kind == RepKind::Boson {
            let (scale_res, bracket_res) = aux_relation_residuals(&rep);
            for (relation, residual) in [("scale-shift", scale_res), ("number-shift", bracket_res)]
            {
                rows.push(FockRow {
                    kind: kind.label().into(),
                    q,
                    dim,
                    relation: relation.into(),
                    residual,
                    passed: residual < RESIDUAL_GATE,
                });
            }
        }
    }
    let failed = rows.iter().any(|r| !r.passed);
    Ok(CommandOutput {
        body: render(&rows, args.common.format),
        failed,
    })
}

fn cmd_evolve(args: &EvolveArgs) -> Result<CommandOutput> {
    if args.steps < 1 {
        return Err(Error::Domain("steps must be at least 1".into()));
    }
    if args.t_max <= 0.0 || !args.t_max.is_finite() {
        return Err(Error::Domain(format!(
            "t-max must be positive, got {}",
            args.t_max
        )));
    }
    let kind = args.model.to_kind();
    let variant = args.variant.to_variant();
    let q = QValue::new(args.q)?;
    let dim = args.dim.unwrap_or(match kind.rep_kind() {
        RepKind::StandardFermion => 2,
        _ => 8,
    });
    let rep = FockRep::new(kind.rep_kind(), q, dim)?;
    let model = HamiltonianModel::new(kind, args.omega)?;
    if args.compare_paper {
        // fail fast when the combination has no closed form on record
        closed_form_factor(kind, variant, 1, q)?;
    }
    let spec = EvolutionSpec::new(rep, model, variant)?;

    let series = integrate_evolution(&spec, args.t_max, args.steps);
    let initial = spec.initial().clone();
    // per-element frequencies are time-independent; compute them once
    let mut elements: Vec<(usize, usize, f64, Option<f64>)> = Vec::new();
    for ((m, n), z) in initial.data().indexed_iter() {
        if z.norm() == 0.0 {
            continue;
        }
        let freq_exact = element_frequency(spec.model(), variant, q, m as u32, n as u32)?;
        let freq_paper = if args.compare_paper {
            Some(
                match closed_form_frequency(spec.model(), variant, n as u32, q) {
                    Ok(matched) => matched.frequency,
                    // the sign-discrepant closed form: report its own value
                    Err(Error::NoOrderingMatches { at_n, .. }) => at_n,
                    Err(other) => return Err(other),
                },
            )
        } else {
            None
        };
        elements.push((m, n, freq_exact, freq_paper));
    }

    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for (k, matrix) in series.iter().enumerate() {
        let t = args.t_max * k as f64 / args.steps as f64;
        worst = worst.max(matrix.max_abs_diff(&exact_evolution(&spec, t)));
        if k == 0 {
            continue;
        }
        for &(m, n, freq_exact, freq_paper) in &elements {
            let z = matrix.entry(m, n);
            rows.push(EvolveRow {
                t,
                m,
                n,
                re: z.re,
                im: z.im,
                abs: z.norm(),
                phase: z.arg(),
                freq_exact,
                freq_paper,
            });
        }
    }
    Ok(CommandOutput {
        body: render(&rows, args.common.format),
        failed: worst > EVOLVE_GATE,
    })
}

fn cmd_limit(args: &LimitArgs) -> Result<CommandOutput> {
    if args.x0 == 0.0 || !args.x0.is_finite() {
        return Err(Error::Domain(format!(
            "x0 must be finite and nonzero, got {}",
            args.x0
        )));
    }
    let power = args.power;
    let f = move |x: f64| x.powi(power as i32);
    let exact = f64::from(power) * args.x0.powi(power as i32 - 1);
    let mut rows = Vec::new();
    for &q in &args.q {
        let qv = QValue::new(q)?;
        if qv.is_one() {
            return Err(Error::Domain(
                "the derivative-error scan needs q != 1".into(),
            ));
        }
        let jd = jackson_derivative_numeric(f, args.x0, qv)?;
        rows.push(LimitRow {
            check: "jd-error".into(),
            q: Some(q),
            n: None,
            value: (jd - exact).abs(),
        });
    }
    for n in 0..=args.n_max {
        let value = fermion_classical_limit(n);
        rows.push(LimitRow {
            check: "fermion-limit".into(),
            q: None,
            n: Some(n),
            value: rational_to_f64(&value),
        });
    }
    Ok(CommandOutput {
        body: render(&rows, args.common.format),
        failed: false,
    })
}
