//! Browser bindings: each export takes builtin expressions and returns a
//! JSON string for the page to render.

use serde_json::json;
use wasm_bindgen::prelude::*;

use semirep::analyze::analyze;
use semirep::constructions::{find_normal_isomorphic, parse_builtin};
use semirep::green::{compute_green, j_order, maximal_subgroup};
use semirep::group::is_prime;
use semirep::Group;

fn characteristic(p: u32) -> Result<u64, String> {
    let p = u64::from(p);
    if p == 0 || is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is neither 0 nor a prime"))
    }
}

/// Limit on semigroup order for the page, so a typo cannot hang the tab.
const PAGE_LIMIT: usize = 400;

fn build(expr: &str) -> Result<semirep::Semigroup, String> {
    let s = parse_builtin(expr).map_err(|e| e.to_string())?;
    if s.order() > PAGE_LIMIT {
        return Err(format!(
            "order {} is above the page limit of {PAGE_LIMIT}",
            s.order()
        ));
    }
    Ok(s)
}

pub fn analyze_json(expr: &str, p: u32) -> Result<String, String> {
    let s = build(expr)?;
    let report = analyze(&s, characteristic(p)?).map_err(|e| e.to_string())?;
    let mut v = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    v["order"] = json!(s.order());
    Ok(v.to_string())
}

pub fn green_json(expr: &str) -> Result<String, String> {
    let s = build(expr)?;
    let green = compute_green(&s);
    let order = j_order(&green);
    let mut classes = Vec::new();
    for c in &green.j_classes {
        let group_order = if c.regular {
            Some(
                maximal_subgroup(&s, &green, c.id, None)
                    .map_err(|e| e.to_string())?
                    .group
                    .order(),
            )
        } else {
            None
        };
        let labels: Vec<&str> = c.elements.iter().map(|&x| s.label(x)).collect();
        classes.push(json!({
            "j": c.id,
            "size": c.elements.len(),
            "regular": c.regular,
            "idempotents": c.idempotents.len(),
            "group_order": group_order,
            "labels": labels,
        }));
    }
    Ok(json!({ "order": s.order(), "classes": classes, "covers": order.covers() }).to_string())
}

pub fn socle_json(group_expr: &str, normal_expr: &str) -> Result<String, String> {
    let g = Group::from_semigroup(&build(group_expr)?).map_err(|e| e.to_string())?;
    let n = if normal_expr.trim().is_empty() {
        g.whole()
    } else {
        let h = Group::from_semigroup(&build(normal_expr)?).map_err(|e| e.to_string())?;
        find_normal_isomorphic(&g, &h).map_err(|e| e.to_string())?
    };
    let socle = g.socle_data().map_err(|e| e.to_string())?;
    let parts = g
        .intersect_with_normal(&socle, &n)
        .map_err(|e| e.to_string())?;
    let gens = g
        .min_normal_generators(&parts.s)
        .map_err(|e| e.to_string())?;
    let minimal: Vec<_> = socle
        .minimal_normals
        .iter()
        .map(|m| json!({ "order": m.subgroup.order(), "abelian": m.abelian }))
        .collect();
    let witness: Vec<&str> = gens.witness.iter().map(|&x| g.label(x)).collect();
    Ok(json!({
        "order": g.order(),
        "minimal_normals": minimal,
        "a_order": socle.a.order(),
        "t_order": socle.t.order(),
        "normal_order": n.order(),
        "a_cap_n_order": parts.a.order(),
        "k": gens.k,
        "witness": witness,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn analyze_expr(expr: &str, p: u32) -> Result<String, JsValue> {
    analyze_json(expr, p).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn green_expr(expr: &str) -> Result<String, JsValue> {
    green_json(expr).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn socle_expr(group_expr: &str, normal_expr: &str) -> Result<String, JsValue> {
    socle_json(group_expr, normal_expr).map_err(|e| JsValue::from_str(&e))
}
