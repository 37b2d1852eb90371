/** DOM wiring for the demo page: state in one place, render applies it. */

import { createClient } from "./api.js";
import { createSubmitter, initialState, ViewState } from "./flow.js";
import { renderHighlights } from "./render.js";

const client = createClient();
const submit = createSubmitter((text, model) => client.predict(text, model));

let state: ViewState = { ...initialState };

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function render(): void {
  const output = el<HTMLDivElement>("output");
  const banner = el<HTMLDivElement>("error-banner");
  const meta = el<HTMLDivElement>("meta");
  const button = el<HTMLButtonElement>("submit");

  button.disabled = state.inFlight;
  button.textContent = state.inFlight ? "Tagging…" : "Tag text";

  if (state.error) {
    el<HTMLSpanElement>("error-text").textContent = state.error;
    banner.hidden = false;
  } else {
    banner.hidden = true;
  }

  if (state.response) {
    // the service's offsets index the text we submitted, which we kept
    const { html, warning } = renderHighlights(lastSubmittedText, state.response);
    output.innerHTML = html;
    meta.textContent =
      `model ${state.response.model} · ${state.response.spans.length} entities · ` +
      `${state.response.elapsed_ms.toFixed(1)} ms`;
    if (warning) {
      el<HTMLSpanElement>("error-text").textContent = warning;
      banner.hidden = false;
    }
  }
}

let lastSubmittedText = "";

async function onSubmit(): Promise<void> {
  state = {
    ...state,
    input: el<HTMLTextAreaElement>("input").value,
    model: el<HTMLSelectElement>("model").value || null,
    inFlight: true,
    error: null,
  };
  lastSubmittedText = state.input;
  render();
  const next = await submit(state);
  if (next !== null) {
    state = next;
    render();
  }
}

async function loadModels(): Promise<void> {
  const select = el<HTMLSelectElement>("model");
  try {
    const models = await client.models();
    select.innerHTML = "";
    for (const model of models) {
      const option = document.createElement("option");
      option.value = model.name;
      option.textContent = `${model.name} (${model.labels.length} labels)`;
      select.appendChild(option);
    }
  } catch (err) {
    state = {
      ...state,
      error: `could not load model list: ${err instanceof Error ? err.message : err}`,
    };
    render();
  }
}

document.addEventListener("DOMContentLoaded", () => {
  el<HTMLButtonElement>("submit").addEventListener("click", () => void onSubmit());
  el<HTMLTextAreaElement>("input").addEventListener("keydown", (event) => {
    if ((event.ctrlKey || event.metaKey) && event.key === "Enter") {
      event.preventDefault();
      void onSubmit();
    }
  });
  el<HTMLButtonElement>("dismiss").addEventListener("click", () => {
    state = { ...state, error: null };
    render();
  });
  void loadModels();
});
