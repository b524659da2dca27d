//! Samples seeded random games and counts the losing pairs that trade,
//! checking each decider answer against the exhaustive oracle.

use simple_trade::oracle::{brute_force_trade, random_game, TruthTable, DEFAULT_ORACLE_BUDGET};
use simple_trade::{dispatch, Classification, Limits, TradeQuery};

fn main() -> simple_trade::Result<()> {
    let limits = Limits::default();
    for seed in 0..8u64 {
        let game = random_game(6, seed, 0.4);
        let losing = TruthTable::new(&game)?.class_members(Classification::Losing);
        let (mut pairs, mut trades) = (0, 0);
        for (i, &s1) in losing.iter().enumerate() {
            for &s2 in &losing[i..] {
                let query = TradeQuery {
                    rep: game.clone(),
                    beta: Classification::Losing,
                    given: vec![s1, s2],
                };
                let yes = dispatch(&query, &limits)?.is_yes();
                let truth = brute_force_trade(&game, 2, Some(&[s1, s2]), DEFAULT_ORACLE_BUDGET)?;
                assert_eq!(yes, truth.is_some());
                pairs += 1;
                trades += usize::from(yes);
            }
        }
        println!(
            "seed {seed}: Wm {:?}, {trades} of {pairs} losing pairs trade",
            game.coalitions()
        );
    }
    Ok(())
}
