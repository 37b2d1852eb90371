/** Shapes of the prediction service's JSON API. */

export interface TokenOut {
  text: string;
  start_char: number;
  end_char: number;
}

export interface SpanOut {
  type: string;
  start_token: number;
  end_token: number;
  text: string;
  score: number;
}

export interface PredictResponse {
  tokens: TokenOut[];
  spans: SpanOut[];
  model: string;
  elapsed_ms: number;
}

export interface ModelInfo {
  name: string;
  labels: string[];
}
