import init, { corpusListing, analyze, lauProduct, runCheck } from "./pkg/amenability_web.js";

const $ = (id) => document.getElementById(id);

function show(el, f) {
  el.classList.remove("error");
  try {
    el.textContent = f();
  } catch (e) {
    el.classList.add("error");
    el.textContent = String(e);
  }
}

await init();

$("corpus").textContent = JSON.parse(corpusListing())
  .map((e) => `${e.name} (${e.label}, dim ${e.dim})`)
  .join(", ");

$("analyze-run").onclick = () => show($("analyze-out"), () => analyze($("analyze-input").value));

const lau = () => lauProduct($("lau-a").value, $("lau-b").value, $("lau-theta").value);
$("lau-run").onclick = () => show($("lau-out"), lau);
$("lau-analyze").onclick = () => show($("lau-out"), () => analyze(lau()));

$("check-run").onclick = () => {
  $("check-out").textContent = "running…";
  setTimeout(() =>
    show($("check-out"), () =>
      runCheck(
        $("check-id").value,
        Number($("check-seed").value),
        Number($("check-trials").value),
        Number($("check-dim").value),
      ),
    ),
  );
};
