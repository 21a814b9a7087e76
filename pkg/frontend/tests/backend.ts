// Spawns the real puzzle service for the test run and hands its base URL
// to the tests. The UI is only exercised against the genuine API.

import { spawn, type ChildProcess } from "node:child_process";
import type { TestProject } from "vitest/node";

let child: ChildProcess | undefined;

async function waitForReady(baseUrl: string, timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${baseUrl}/designs`);
      if (response.ok) return;
    } catch (error) {
      lastError = error;
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error(`puzzle service did not come up: ${lastError}`);
}

export default async function setup(project: TestProject): Promise<() => void> {
  const port = 20000 + Math.floor(Math.random() * 20000);
  const baseUrl = `http://127.0.0.1:${port}`;
  child = spawn(
    "python3",
    ["-m", "conwaygroupoids.cli", "serve", "--port", String(port)],
    { stdio: ["ignore", "pipe", "inherit"] },
  );
  await waitForReady(baseUrl, 30000);
  project.provide("baseUrl", baseUrl);
  return () => {
    child?.kill();
  };
}

declare module "vitest" {
  export interface ProvidedContext {
    baseUrl: string;
  }
}
