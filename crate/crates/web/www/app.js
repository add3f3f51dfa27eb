import init, { analyze, explore, validate_lambda } from "../pkg/clutterlab_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, text, cls) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  if (cls) e.className = cls;
  return e;
}

function table(rows) {
  const t = el("table");
  for (const [k, v] of rows) {
    if (v === null || v === undefined) continue;
    const tr = el("tr");
    tr.append(el("th", k), el("td", String(v)));
    t.append(tr);
  }
  return t;
}

function show(target, result, render) {
  const out = $(target);
  out.replaceChildren();
  const value = JSON.parse(result);
  if (value.error) {
    out.append(el("p", value.error, "error"));
  } else {
    out.append(...render(value));
  }
}

function diagnosis(d) {
  const l = d.lsequence ? `(${d.lsequence.join(",")})` : null;
  return d.valid
    ? el("p", `valid, l = ${l}`, "ok")
    : el("p", `invalid: ${d.problem}${l ? ` (l = ${l})` : ""}`, "error");
}

function runAnalyze() {
  show("analyze-out", analyze($("clutter").value), (a) => {
    const parts = [
      table([
        ["n, d", `${a.n}, ${a.d}`],
        ["circuits", a.circuits],
        ["chordal", a.chordal],
        ["order", a.order],
        ["multiset", a.multiset && `{${a.multiset.join(",")}}`],
        ["λ", a.lambda],
        ["f-vector", a.f_vector],
        ["h-vector", a.h_vector],
        ["Betti numbers", a.betti],
      ]),
    ];
    if (a.lambda_check) parts.push(diagnosis(a.lambda_check));
    return parts;
  });
}

function runExplore() {
  const n = Number($("explore-n").value);
  const d = Number($("explore-d").value);
  show("explore-out", explore(n, d), (x) => {
    const bounds = el("table");
    const head = el("tr");
    head.append(el("th", "i"), el("th", "max λ_i"), el("th", "extremal λ"));
    bounds.append(head);
    for (const b of x.bounds) {
      const tr = el("tr");
      tr.append(el("td", b.i), el("td", b.lambda_max), el("td", b.profile));
      bounds.append(tr);
    }
    return [
      table([
        ["α", x.alpha],
        ["σ", x.sigma],
        ["λ of the complete clutter", x.complete_lambda],
      ]),
      bounds,
    ];
  });
}

function runValidate() {
  const n = Number($("validate-n").value);
  const d = Number($("validate-d").value);
  show("validate-out", validate_lambda(n, d, $("validate-lambda").value), (v) => [diagnosis(v)]);
}

await init();
$("status").textContent = "ready";
$("analyze").onclick = runAnalyze;
$("explore").onclick = runExplore;
$("validate").onclick = runValidate;
runAnalyze();
runExplore();
runValidate();
