import fs from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import { SessionApi, SessionView } from "../src/api.js";

const here = path.dirname(fileURLToPath(import.meta.url));

export function fixture<T = SessionView>(name: string): T {
  const text = fs.readFileSync(path.join(here, "fixtures", name), "utf-8");
  return JSON.parse(text) as T;
}

export interface RecordedRequest {
  url: string;
  method: string;
  body: unknown;
}

/** Scripted fetch: pops one canned response per request, records calls. */
export class FakeBackend {
  requests: RecordedRequest[] = [];
  private queue: Array<{ status: number; body: unknown }> = [];

  respond(body: unknown, status = 200): void {
    this.queue.push({ status, body });
  }

  api(): SessionApi {
    return new SessionApi("", async (url, init) => {
      this.requests.push({
        url,
        method: init?.method ?? "GET",
        body: init?.body ? JSON.parse(init.body as string) : undefined,
      });
      const next = this.queue.shift();
      if (!next) {
        throw new Error(`no canned response for ${url}`);
      }
      return new Response(JSON.stringify(next.body), { status: next.status });
    });
  }
}
