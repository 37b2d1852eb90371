/** Thin client for the prediction service. */

import type { ModelInfo, PredictResponse } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

async function errorDetail(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body && typeof body.detail === "string") {
      return body.detail;
    }
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return `${response.status} ${response.statusText}`;
}

export interface Client {
  models(): Promise<ModelInfo[]>;
  predict(text: string, model: string | null): Promise<PredictResponse>;
}

export function createClient(baseUrl = "", fetchImpl: typeof fetch = fetch): Client {
  return {
    async models(): Promise<ModelInfo[]> {
      const response = await fetchImpl(`${baseUrl}/models`);
      if (!response.ok) {
        throw new ApiError(response.status, await errorDetail(response));
      }
      return response.json();
    },

    async predict(text: string, model: string | null): Promise<PredictResponse> {
      const response = await fetchImpl(`${baseUrl}/predict`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(model ? { text, model } : { text }),
      });
      if (!response.ok) {
        throw new ApiError(response.status, await errorDetail(response));
      }
      return response.json();
    },
  };
}
