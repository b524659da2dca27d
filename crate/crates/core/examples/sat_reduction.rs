//! Builds the trade instance of a CNF formula and decides it. The instance
//! trades exactly when the formula is satisfiable.

use simple_trade::reductions::{game_from_cnf_j, parse_dimacs, sat_brute_force};
use simple_trade::trade::{decide_j_trade, decide_lm_l_exact};
use simple_trade::Limits;

fn main() -> simple_trade::Result<()> {
    let limits = Limits::default();
    let formulas = [
        ("xor", "p cnf 2 2\n1 2 0\n-1 -2 0\n"),
        ("contradiction", "p cnf 1 2\n1 0\n-1 0\n"),
        (
            "every sign pattern",
            "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n",
        ),
    ];
    for (name, text) in formulas {
        let f = parse_dimacs(text)?;
        let sat = sat_brute_force(&f)?;
        let two = game_from_cnf_j(&f, 2)?;
        let decided = decide_lm_l_exact(&two.game, two.given[0], two.given[1], &limits)?;
        println!(
            "{name}: satisfiable {}, {} players, {} maximal losing, 2-trade {}",
            sat.is_some(),
            two.game.n(),
            two.game.coalitions().len(),
            decided.is_yes()
        );
        for j in [3, 4] {
            let inst = game_from_cnf_j(&f, j)?;
            let answer = decide_j_trade(&inst.game, j, Some(&inst.given), &limits)?;
            println!("  {j}-coalition instance trades: {}", answer.is_yes());
        }
    }
    Ok(())
}
