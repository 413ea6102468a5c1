use kacspec_core::matrices::build_hahn;
use kacspec_core::spectral::{discriminant_abc, discriminant_general};
use kacspec_core::{parse_rational, Family, FamilyKind, Rational};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::args::{FamilyArgs, Preset};
use crate::CliError;

/// Draws `p/q` with `p` in `-9..=9 \ {0}` and `q` in `1..=6`.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p = loop {
        let p: i64 = rng.gen_range(-9..=9);
        if p != 0 {
            break p;
        }
    };
    Rational::new(p.into(), rng.gen_range(1i64..=6).into())
}

fn draw<T>(rng: &mut ChaCha8Rng, mut make: impl FnMut(&mut ChaCha8Rng) -> Option<T>) -> T {
    loop {
        if let Some(v) = make(rng) {
            return v;
        }
    }
}

/// Random admissible parameters: nonzero entries, nonvanishing discriminant,
/// and for `C_N(alpha)` no vanishing denominator up to `N`.
pub fn random_family(kind: FamilyKind, n: usize, rng: &mut ChaCha8Rng) -> Family {
    match kind {
        FamilyKind::General => draw(rng, |r| {
            let (alpha, beta, gamma, delta) = (
                small_rational(r),
                small_rational(r),
                small_rational(r),
                small_rational(r),
            );
            (!discriminant_general(&alpha, &beta, &gamma, &delta).is_zero()).then_some(
                Family::General {
                    alpha,
                    beta,
                    gamma,
                    delta,
                },
            )
        }),
        FamilyKind::Abc => draw(rng, |r| {
            let (a, b, c) = (small_rational(r), small_rational(r), small_rational(r));
            (!discriminant_abc(&a, &b, &c).is_zero()).then_some(Family::Abc { a, b, c })
        }),
        FamilyKind::Hahn => draw(rng, |r| {
            let alpha = small_rational(r);
            build_hahn(&alpha, n)
                .is_ok()
                .then_some(Family::Hahn { alpha })
        }),
        FamilyKind::Kac => Family::Kac,
        FamilyKind::G | FamilyKind::S | FamilyKind::H => {
            Family::from_params(kind, &[]).expect("parameter-free family")
        }
    }
}

fn random_preset(preset: Preset, rng: &mut ChaCha8Rng) -> Family {
    let half = Rational::new(1.into(), 2.into());
    match preset {
        Preset::SylvesterKac => Family::sylvester_kac_preset(),
        Preset::Painvin => draw(rng, |r| {
            let a = small_rational(r);
            (!a.is_one() && a != half).then(|| Family::painvin_preset(a))
        }),
        Preset::Krawtchouk => draw(rng, |r| {
            let p = small_rational(r);
            (!p.is_one()).then(|| Family::krawtchouk_preset(p))
        }),
    }
}

fn parse(name: &str, value: &str) -> Result<Rational, CliError> {
    parse_rational(value).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn only(given: &[(&'static str, &str)], allowed: &[&str], what: &str) -> Result<(), CliError> {
    match given.iter().find(|(k, _)| !allowed.contains(k)) {
        Some((k, _)) => Err(CliError::Usage(format!("{what} does not take --{k}"))),
        None => Ok(()),
    }
}

/// Resolves `--family`/`--preset` and parameter flags. With `randomize`,
/// a family whose parameters are all omitted gets admissible random ones.
pub fn resolve(args: &FamilyArgs, randomize: bool) -> Result<Family, CliError> {
    let given = args.given_params();
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    if let Some(preset) = args.preset {
        let (free, what) = match preset {
            Preset::SylvesterKac => (None, "preset sylvester-kac"),
            Preset::Painvin => (Some("a"), "preset painvin"),
            Preset::Krawtchouk => (Some("p"), "preset krawtchouk"),
        };
        only(&given, free.as_slice(), what)?;
        return match (free, given.first()) {
            (None, _) => Ok(Family::sylvester_kac_preset()),
            (Some(_), Some((name, value))) => {
                let x = parse(name, value)?;
                Ok(match preset {
                    Preset::Painvin => Family::painvin_preset(x),
                    _ => Family::krawtchouk_preset(x),
                })
            }
            (Some(_), None) if randomize => Ok(random_preset(preset, &mut rng)),
            (Some(name), None) => Err(CliError::Usage(format!("{what} needs --{name}"))),
        };
    }
    let name = args
        .family
        .as_deref()
        .ok_or_else(|| CliError::Usage("one of --family or --preset is required".into()))?;
    let kind: FamilyKind = name.parse().map_err(|_| {
        CliError::Usage(format!(
            "unknown family {name:?}; expected one of kac, general, abc, g, s, h, hahn"
        ))
    })?;
    only(&given, kind.param_names(), &format!("family {kind}"))?;
    if given.is_empty() && !kind.param_names().is_empty() && randomize {
        return Ok(random_family(kind, args.n, &mut rng));
    }
    let params = given
        .iter()
        .map(|(k, v)| Ok((k.to_string(), parse(k, v)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Family::from_params(kind, &params)?)
}
