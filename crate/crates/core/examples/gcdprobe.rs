use birat_core::poly::{parse_poly, resultant_probed, content_primpart};
use birat_core::vars::VarTable;
use std::collections::HashMap;

fn main() {
    let t = VarTable::standard();
    let p = |s: &str| parse_poly(&t, s).unwrap();
    let p1n = p("-t2*(t1^3-t1^2-2*t1*t2-t2^2)");
    let q1 = p("(t1^2+t1*t2-t1-t2^2)^2");
    let p2n = p("t1^6-2*t1^5+t1^4*t2^2-4*t1^4*t2+t1^4-t1^3*t2^3+4*t1^3*t2+t1^2*t2^3+6*t1^2*t2^2+4*t1*t2^3+t2^4");
    let q2 = p("t1^2*(t1^2+t1*t2-t1-t2^2)^2");
    let p3n = p("t1^2*t2^2");
    let q3 = p("(t1^2+t1*t2-t1-t2^2)^2");
    let hsub = |f: &birat_core::MPoly| {
        let mut b = HashMap::new();
        b.insert(t.var("t1"), p("h1"));
        b.insert(t.var("t2"), p("h2"));
        f.subst_poly(&b)
    };
    let g1 = hsub(&p1n).mul(&q1).sub(&p1n.mul(&hsub(&q1)));
    let g2 = hsub(&p2n).mul(&q2).sub(&p2n.mul(&hsub(&q2)));
    let g3 = hsub(&p3n).mul(&q3).sub(&p3n.mul(&hsub(&q3)));
    let second = g2.add(&p("zmix").mul(&g3));
    let start = std::time::Instant::now();
    let res = resultant_probed(&g1, &second, t.var("t2"));
    eprintln!("probed Res_t2: {:?}, {} terms, deg_t1={} deg_h1={} deg_h2={} deg_z={}",
        start.elapsed(), res.num_terms(), res.degree_in(t.var("t1")),
        res.degree_in(t.var("h1")), res.degree_in(t.var("h2")), res.degree_in(t.var("zmix")));
    let start = std::time::Instant::now();
    let (content, _pp) = content_primpart(&res, &[t.var("zmix")]).unwrap();
    eprintln!("content_Z: {:?}, {} terms", start.elapsed(), content.num_terms());
    let start = std::time::Instant::now();
    let (_c, pp1) = content_primpart(&content, &[t.var("h1"), t.var("h2")]).unwrap();
    eprintln!("primpart_h: {:?}, {} terms", start.elapsed(), pp1.num_terms());
    let start = std::time::Instant::now();
    let (_c2, r1) = content_primpart(&pp1, &[t.var("t1")]).unwrap();
    eprintln!("primpart_t1: {:?} -> R1 deg_t1 = {}, {} terms", start.elapsed(), r1.degree_in(t.var("t1")), r1.num_terms());
    eprintln!("R1 = {}", r1);
}
