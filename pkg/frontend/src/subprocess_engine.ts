import { spawn, type ChildProcessByStdio } from 'node:child_process';
import type { Readable, Writable } from 'node:stream';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';
import { JsonEngine, type Reply } from './engine.js';

const HERE = dirname(fileURLToPath(import.meta.url));
const SERVER = join(HERE, '..', 'bridge', 'engine_server.py');

/**
 * Engine backed by the Python bridge over line-delimited JSON on stdio.
 * The bridge answers strictly in request order, so a FIFO of resolvers is
 * all the bookkeeping needed.
 */
export class SubprocessEngine extends JsonEngine {
  private child: ChildProcessByStdio<Writable, Readable, null>;
  private pending: ((reply: Reply) => void)[] = [];
  private buffer = '';

  constructor(serverPath: string = SERVER) {
    super();
    this.child = spawn('python3', [serverPath], {
      stdio: ['pipe', 'pipe', 'inherit'],
    });
    this.child.stdout.setEncoding('utf8');
    this.child.stdout.on('data', (chunk: string) => {
      this.buffer += chunk;
      let nl;
      while ((nl = this.buffer.indexOf('\n')) >= 0) {
        const line = this.buffer.slice(0, nl);
        this.buffer = this.buffer.slice(nl + 1);
        const next = this.pending.shift();
        if (next) next(JSON.parse(line) as Reply);
      }
    });
  }

  rpc(req: Record<string, unknown>): Promise<Reply> {
    return new Promise((resolve) => {
      this.pending.push(resolve);
      this.child.stdin.write(JSON.stringify(req) + '\n');
    });
  }

  close(): void {
    this.child.stdin.end();
    this.child.kill();
  }
}
