/**
 * Submission state machine, kept DOM-free so it can be tested directly.
 *
 * At most one response is ever applied per submission round: every call
 * takes a ticket, and a response whose ticket is no longer the newest is
 * dropped (returns null) instead of overwriting fresher results.
 */

import type { PredictResponse } from "./types.js";

export interface ViewState {
  input: string;
  model: string | null;
  response: PredictResponse | null;
  error: string | null;
  inFlight: boolean;
}

export const initialState: ViewState = {
  input: "",
  model: null,
  response: null,
  error: null,
  inFlight: false,
};

export type PostPredict = (
  text: string,
  model: string | null
) => Promise<PredictResponse>;

export type Submitter = (state: ViewState) => Promise<ViewState | null>;

export function createSubmitter(post: PostPredict): Submitter {
  let newest = 0;
  return async function submit(state: ViewState): Promise<ViewState | null> {
    if (!state.input.trim()) {
      return { ...state, error: "Enter some text first.", inFlight: false };
    }
    const ticket = ++newest;
    try {
      const response = await post(state.input, state.model);
      if (ticket !== newest) {
        return null; // a newer submission is in flight or already landed
      }
      return { ...state, response, error: null, inFlight: false };
    } catch (err) {
      if (ticket !== newest) {
        return null;
      }
      const message = err instanceof Error ? err.message : String(err);
      // keep the previous response so existing highlights survive the error
      return { ...state, error: message, inFlight: false };
    }
  };
}
