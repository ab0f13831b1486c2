// Dev server for the canvas demo: serves the static page and forwards
// /engine requests to one Python bridge process. One engine per server,
// which is all a single-user demo needs.

import { createServer } from 'node:http';
import { readFile } from 'node:fs/promises';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';
import { SubprocessEngine } from './subprocess_engine.js';

const ROOT = join(dirname(fileURLToPath(import.meta.url)), '..');
const PORT = Number(process.env.PORT ?? 8000);

const MIME: Record<string, string> = {
  '.html': 'text/html; charset=utf-8',
  '.js': 'text/javascript; charset=utf-8',
  '.map': 'application/json',
};

const engine = new SubprocessEngine();

const server = createServer((req, res) => {
  void (async () => {
    if (req.method === 'POST' && req.url === '/engine') {
      let body = '';
      for await (const chunk of req) body += chunk;
      const reply = await engine.rpc(JSON.parse(body) as Record<string, unknown>);
      res.writeHead(200, { 'content-type': 'application/json' });
      res.end(JSON.stringify(reply));
      return;
    }
    const url = req.url === '/' ? '/index.html' : (req.url ?? '');
    // only the page itself and compiled modules, nothing else on disk
    if (!/^\/(index\.html|dist\/[\w.-]+)$/.test(url)) {
      res.writeHead(404).end('not found');
      return;
    }
    try {
      const data = await readFile(join(ROOT, url.slice(1)));
      const ext = url.slice(url.lastIndexOf('.'));
      res.writeHead(200, { 'content-type': MIME[ext] ?? 'application/octet-stream' });
      res.end(data);
    } catch {
      res.writeHead(404).end('not found');
    }
  })().catch((err) => {
    res.writeHead(500, { 'content-type': 'application/json' });
    res.end(JSON.stringify({ ok: false, error: String(err) }));
  });
});

server.listen(PORT, () => {
  console.log(`demo on http://localhost:${PORT}/`);
});
