// temporary profiling harness
use birat_core::fiber::*;
use birat_core::poly::{parse_poly, resultant};
use birat_core::vars::VarTable;

fn main() {
    eprintln!("start");
    let t = VarTable::standard();
    let p = |s: &str| parse_poly(&t, s).unwrap();
    let param = ProjParam::new([
        p("-t1^2*(t1^3-t1^2*t3-2*t1*t2*t3-t2^2*t3)*t2"),
        p("t1^6-2*t1^5*t3+t1^4*t2^2-4*t1^4*t2*t3+t1^4*t3^2-t1^3*t2^3+4*t1^3*t2*t3^2+t1^2*t2^3*t3+6*t1^2*t2^2*t3^2+4*t1*t2^3*t3^2+t2^4*t3^2"),
        p("t1^4*t2^2"),
        p("t1^2*(t1^2+t1*t2-t1*t3-t2^2)^2"),
    ]).unwrap();
    eprintln!("param ok");
    let fracs = param.affine_fractions().unwrap();
    for (i, f) in fracs.iter().enumerate() {
        eprintln!("frac {}: num {} terms deg {}, den {} terms deg {}", i, f.num().num_terms(), f.num().total_degree(), f.den().num_terms(), f.den().total_degree());
    }
    use std::collections::HashMap;
    let mut to_h = HashMap::new();
    to_h.insert(t.var("t1"), parse_poly(&t, "h1").unwrap());
    to_h.insert(t.var("t2"), parse_poly(&t, "h2").unwrap());
    let mut gens = vec![];
    for f in &fracs {
        let g = f.num().subst_poly(&to_h).mul(f.den()).sub(&f.num().mul(&f.den().subst_poly(&to_h)));
        eprintln!("G: {} terms, deg_t2 {}", g.num_terms(), g.degree_in(t.var("t2")));
        gens.push(g.normalized());
    }
    let zmix = p("zmix");
    let second = gens[1].add(&zmix.mul(&gens[2]));
    eprintln!("second: {} terms", second.num_terms());
    let start = std::time::Instant::now();
    let res = resultant(&gens[0], &second, t.var("t2"));
    eprintln!("Res_t2: {:?}, {} terms", start.elapsed(), res.num_terms());
}
