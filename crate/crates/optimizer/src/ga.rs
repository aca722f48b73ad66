//! Seeded, deterministic genetic algorithm over pulse bit strings.
//!
//! Tournament selection, single-point crossover, per-bit mutation and
//! elitism. Fitness evaluations within a generation are independent and run
//! on the rayon pool; results are merged in population index order and all
//! random choices come from a single master stream, so a fixed seed gives a
//! bit-identical result regardless of worker count. Equal fitness values are
//! resolved by lexicographic bit-string order.

use std::collections::HashMap;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sfq_core::{FidelityReport, TargetGate, TransmonSpec};

use crate::error::OptimizerError;
use crate::fitness::{evaluate, fitness};
use crate::grid::ClockGrid;
use crate::pattern::PulsePattern;

/// Genetic-algorithm hyperparameters.
///
/// `elite_count` individuals are copied unchanged into the next generation;
/// the rest are bred by tournament selection, single-point crossover and
/// per-bit mutation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GAConfig {
    pub population_size: usize,
    pub generations: usize,
    pub crossover_rate: f64,
    pub mutation_rate_per_bit: f64,
    pub elite_count: usize,
    pub tournament_size: usize,
    pub rng_seed: u64,
}

impl GAConfig {
    /// Defaults for an N-bit register: population 100, 500 generations,
    /// crossover 0.7, per-bit mutation 1/N, elitism 2, tournament 3.
    pub fn for_register(n_bits: usize) -> Self {
        Self {
            population_size: 100,
            generations: 500,
            crossover_rate: 0.7,
            mutation_rate_per_bit: 1.0 / n_bits.max(1) as f64,
            elite_count: 2,
            tournament_size: 3,
            rng_seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), OptimizerError> {
        if self.population_size == 0 {
            return Err(OptimizerError::InvalidConfig(
                "population_size must be at least 1".into(),
            ));
        }
        // elite_count == population_size degenerates to pure elitism, which
        // is allowed so that selection-free configurations are expressible
        if self.elite_count > self.population_size {
            return Err(OptimizerError::InvalidConfig(format!(
                "elite_count {} exceeds population_size {}",
                self.elite_count, self.population_size
            )));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(OptimizerError::InvalidConfig(format!(
                "crossover_rate must be in [0, 1], got {}",
                self.crossover_rate
            )));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate_per_bit) {
            return Err(OptimizerError::InvalidConfig(format!(
                "mutation_rate_per_bit must be in [0, 1], got {}",
                self.mutation_rate_per_bit
            )));
        }
        if self.tournament_size == 0 {
            return Err(OptimizerError::InvalidConfig(
                "tournament_size must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Best/mean infidelity of one generation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenerationStats {
    pub generation: usize,
    pub best: f64,
    pub mean: f64,
}

/// Outcome of a search run.
#[derive(Debug, Clone)]
pub struct OptimizationResult {
    pub best_pattern: PulsePattern,
    pub best_report: FidelityReport,
    /// Per-generation statistics, entry 0 being the initial population.
    /// Best infidelity is non-increasing (elitism).
    pub history: Vec<GenerationStats>,
    /// Fitness evaluations requested (population × generations incl. the
    /// initial one); independent of result caching.
    pub evaluations: u64,
}

impl OptimizationResult {
    pub fn best_infidelity(&self) -> f64 {
        self.best_report.infidelity()
    }

    /// History as JSON lines `{"generation":..,"best":..,"mean":..}`.
    pub fn write_history_jsonl<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for entry in &self.history {
            serde_json::to_writer(&mut w, entry)?;
            writeln!(w)?;
        }
        Ok(())
    }
}

/// Search pulse bit strings for minimum gate infidelity.
///
/// `seed_patterns` are inserted into the initial population (their fitness is
/// never lost thanks to elitism); the rest is filled with uniform random
/// bits.
pub fn ga_search(
    config: &GAConfig,
    grid: &ClockGrid,
    spec: &TransmonSpec,
    target: &TargetGate,
    delta_theta: f64,
    seed_patterns: &[PulsePattern],
) -> Result<OptimizationResult, OptimizerError> {
    config.validate()?;
    let n_bits = grid.n_ticks();
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);

    let mut population: Vec<Vec<bool>> = Vec::with_capacity(config.population_size);
    for pattern in seed_patterns.iter().take(config.population_size) {
        if pattern.bits().len() != n_bits {
            return Err(OptimizerError::SeedLengthMismatch {
                expected: n_bits,
                actual: pattern.bits().len(),
            });
        }
        population.push(pattern.bits().to_vec());
    }
    while population.len() < config.population_size {
        population.push((0..n_bits).map(|_| rng.random::<bool>()).collect());
    }

    let mut cache: HashMap<Vec<bool>, f64> = HashMap::new();
    let mut history = Vec::with_capacity(config.generations + 1);
    let mut evaluations = 0u64;
    let mut best: Option<(f64, Vec<bool>)> = None;

    for generation in 0..=config.generations {
        let fitnesses = evaluate_population(&population, &mut cache, grid, spec, target, delta_theta)?;
        evaluations += population.len() as u64;

        let mut gen_best = f64::INFINITY;
        let mut mean = 0.0;
        for (bits, &f) in population.iter().zip(&fitnesses) {
            mean += f;
            gen_best = gen_best.min(f);
            let better = match &best {
                None => true,
                Some((bf, bb)) => f < *bf || (f == *bf && *bits < *bb),
            };
            if better {
                best = Some((f, bits.clone()));
            }
        }
        mean /= population.len() as f64;
        history.push(GenerationStats {
            generation,
            best: gen_best,
            mean,
        });

        if generation == config.generations {
            break;
        }

        population = breed(&population, &fitnesses, config, &mut rng);
    }

    let (_, best_bits) = best.expect("population is non-empty");
    let best_pattern = PulsePattern::new(*grid, best_bits)?;
    let best_report = evaluate(&best_pattern, spec, target, delta_theta)?;
    Ok(OptimizationResult {
        best_pattern,
        best_report,
        history,
        evaluations,
    })
}

/// Fitness of every individual, preserving index order. Cached values are
/// reused; misses are computed on the rayon pool. Caching cannot change any
/// value, only skip recomputation.
fn evaluate_population(
    population: &[Vec<bool>],
    cache: &mut HashMap<Vec<bool>, f64>,
    grid: &ClockGrid,
    spec: &TransmonSpec,
    target: &TargetGate,
    delta_theta: f64,
) -> Result<Vec<f64>, OptimizerError> {
    let mut seen: std::collections::HashSet<&Vec<bool>> = std::collections::HashSet::new();
    let mut misses: Vec<&Vec<bool>> = Vec::new();
    for bits in population {
        if !cache.contains_key(bits) && seen.insert(bits) {
            misses.push(bits);
        }
    }
    let computed: Vec<Result<f64, OptimizerError>> = misses
        .par_iter()
        .map(|bits| {
            let pattern = PulsePattern::new(*grid, (*bits).clone())?;
            fitness(&pattern, spec, target, delta_theta)
        })
        .collect();
    for (bits, value) in misses.into_iter().zip(computed) {
        cache.insert(bits.clone(), value?);
    }
    Ok(population.iter().map(|bits| cache[bits]).collect())
}

fn breed(
    population: &[Vec<bool>],
    fitnesses: &[f64],
    config: &GAConfig,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<bool>> {
    let n_bits = population[0].len();

    // rank by (fitness, lexicographic bits) for elitism and tie-breaking
    let mut order: Vec<usize> = (0..population.len()).collect();
    order.sort_by(|&i, &j| {
        fitnesses[i]
            .total_cmp(&fitnesses[j])
            .then_with(|| population[i].cmp(&population[j]))
    });

    let mut next: Vec<Vec<bool>> = order
        .iter()
        .take(config.elite_count)
        .map(|&i| population[i].clone())
        .collect();

    let pick = |rng: &mut ChaCha8Rng| -> usize {
        let mut winner = rng.random_range(0..population.len());
        for _ in 1..config.tournament_size {
            let challenger = rng.random_range(0..population.len());
            let better = fitnesses[challenger]
                .total_cmp(&fitnesses[winner])
                .then_with(|| population[challenger].cmp(&population[winner]));
            if better.is_lt() {
                winner = challenger;
            }
        }
        winner
    };

    while next.len() < config.population_size {
        let a = pick(rng);
        let b = pick(rng);
        let mut child = if rng.random::<f64>() < config.crossover_rate && n_bits > 1 {
            let point = rng.random_range(1..n_bits);
            let mut bits = population[a][..point].to_vec();
            bits.extend_from_slice(&population[b][point..]);
            bits
        } else {
            population[a].clone()
        };
        if config.mutation_rate_per_bit > 0.0 {
            for bit in child.iter_mut() {
                if rng.random::<f64>() < config.mutation_rate_per_bit {
                    *bit = !*bit;
                }
            }
        }
        next.push(child);
    }
    next
}
